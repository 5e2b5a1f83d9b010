"""verseflow: corpus-driven text-to-speech performance planning.

The package turns syllable-per-cell rap transcriptions into line-indexed
text, runs stochastic sequencers (a collapsed Gibbs chain or a
digit-quantized Lorenz flow) to produce per-line control material, and
maps both into deterministic, seed-stamped performance plans that a
speech engine can play back.  A small HTTP/SSE service and a one-shot CLI
expose the same pipeline.
"""

from .corpus import (
    NULL_TOKEN,
    Corpus,
    SyllableToken,
    TranscriptLine,
    get_line,
    load_corpus,
    merge_syllables,
    parse_cell,
    validate_silbe,
)
from .errors import (
    EmptyLogError,
    FormatError,
    InvalidConfigError,
    LineIndexError,
    MalformedContinuationError,
    NoPlanError,
    NonFiniteStateError,
    NotArmedError,
    PlanRangeError,
    SinkError,
    UnknownPlanError,
    UnknownSessionError,
    VerseflowError,
)
from .planner import (
    MODE_GIBBS_MULTI,
    MODE_GIBBS_SINGLE,
    MODE_LORENZ,
    MODE_RHYTHMIC,
    MODES,
    ControlEvent,
    PerformancePlan,
    PlannerConfig,
    clamp_rate,
    clamp_volume,
    plan_lines,
    plan_rhythmic,
    render_ssml,
    select_voice,
)
from .sequencers import (
    RNG_ALGORITHM,
    ControlVector,
    DiagnosticsReport,
    GibbsConfig,
    LorenzConfig,
    SampleLog,
    collapsed_gibbs,
    digit0,
    emit_diagnostics,
    lorenz_sequence,
)
from .session import (
    DEFAULT_PARAMS,
    PlanService,
    PlanStore,
    Session,
    apply_params,
    stream_events,
)

__version__ = "0.1.0"
