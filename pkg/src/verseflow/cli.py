"""Command-line entry points.

``verseflow`` runs the one-shot pipeline: load a transcription file,
generate a plan from the given parameters, and write the plan JSON (plus
optional speech markup and diagnostics CSV).  ``verseflow-serve`` starts
the HTTP/SSE service around the same corpus.

Exit codes: 0 success, 1 pipeline error, 2 bad flags.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .corpus import load_corpus
from .errors import VerseflowError
from .planner import MODES, SPLIT_SEGMENTS, render_ssml
from .sequencers import emit_diagnostics
from .session import PlanService, PlanStore

MODE_CHOICES = ("gibbs",) + MODES  # plain "gibbs" means the single-voice mode


def _check_lines(ctx, param, value):
    if not 1 <= value <= 10:
        raise click.BadParameter("number_of_lines must be in [1, 10]")
    return value


def _check_rho(ctx, param, value):
    if value + value**3 < 0:
        raise click.BadParameter("rho must satisfy rho + rho^3 >= 0")
    return value


def _check_dt(ctx, param, value):
    if value <= 0:
        raise click.BadParameter("dt must be > 0")
    return value


@click.command()
@click.option("--corpus", "corpus_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Transcription file, one syllable cell per token.")
@click.option("--mode", type=click.Choice(MODE_CHOICES), default="gibbs",
              show_default=True)
@click.option("--lines", type=int, default=1, callback=_check_lines,
              show_default=True, help="Lines to perform (max 10).")
@click.option("--start", type=int, default=1, show_default=True,
              help="First corpus line (0-indexed).")
@click.option("--rho", type=float, default=0.99, callback=_check_rho,
              show_default=True, help="Gibbs correlation.")
@click.option("--x", type=float, default=50.0, show_default=True,
              help="Initial rate value.")
@click.option("--y", type=float, default=45.0, show_default=True,
              help="Initial voice value.")
@click.option("--z", type=float, default=0.0, show_default=True,
              help="Initial volume value; must be nonzero to generate.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--split", type=click.Choice(sorted(SPLIT_SEGMENTS)),
              default="half", show_default=True,
              help="Rhythmic-mode segment size.")
@click.option("--sigma", type=float, default=10.0, show_default=True)
@click.option("--rho-l", type=float, default=28.0, show_default=True,
              help="Lorenz rho (distinct from the Gibbs correlation).")
@click.option("--beta", type=float, default=8.0 / 3.0)
@click.option("--dt", type=float, default=0.01, callback=_check_dt,
              show_default=True, help="Lorenz Euler step size.")
@click.option("--null-tokens", is_flag=True,
              help="Keep '.' placeholders at continuation positions.")
@click.option("--strip-leading-char", is_flag=True,
              help="Drop the first character of each line's first cell.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path),
              default=Path("plan.json"), show_default=True,
              help="Plan JSON output path.")
@click.option("--ssml", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Also write speech markup here.")
@click.option("--diagnostics", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Also write the sample log CSV here.")
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path),
              default=None, help="Plan store directory (default: MCMCHAOS_DATA_DIR or ./plans).")
def main(corpus_path, mode, lines, start, rho, x, y, z, seed, split, sigma,
         rho_l, beta, dt, null_tokens, strip_leading_char, out, ssml,
         diagnostics, data_dir):
    """Generate one performance plan and write it to disk."""
    if mode == "gibbs":
        mode = "gibbs_single"
    try:
        corpus = load_corpus(corpus_path, null_tokens=null_tokens,
                             strip_leading_char=strip_leading_char)
        service = PlanService(corpus, PlanStore(data_dir))
        session = service.create_session({
            "mode": mode, "lines": lines, "start": start, "rho": rho,
            "x": x, "y": y, "z": z, "seed": seed, "split": split,
            "sigma": sigma, "rho_l": rho_l, "beta": beta, "dt": dt,
        })
        plan = service.generate(session.id)
        out.write_text(plan.to_json(), encoding="utf-8")
        if ssml is not None:
            ssml.write_text(render_ssml(plan), encoding="utf-8")
        if diagnostics is not None:
            if plan.sample_log is None:
                raise VerseflowError(
                    "diagnostics need a sample log; the rhythmic mode has none"
                )
            emit_diagnostics(plan.sample_log, diagnostics)
    except (VerseflowError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(str(out))


@click.command()
@click.option("--corpus", "corpus_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8765, show_default=True)
@click.option("--null-tokens", is_flag=True)
@click.option("--strip-leading-char", is_flag=True)
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path),
              default=None)
def serve(corpus_path, host, port, null_tokens, strip_leading_char, data_dir):
    """Serve the HTTP/SSE control API around one corpus."""
    import uvicorn

    from .api import create_app

    try:
        corpus = load_corpus(corpus_path, null_tokens=null_tokens,
                             strip_leading_char=strip_leading_char)
    except (VerseflowError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    app = create_app(PlanService(corpus, PlanStore(data_dir)))
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
