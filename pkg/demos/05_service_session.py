"""
The live session service
========================

The HTTP/SSE service wraps the same pipeline for interactive control.  A
session starts with volume z = 0 and *disarmed*: nothing plays.  The
moment a parameter patch moves z off zero, the session arms and generates
a plan; the stream endpoint then replays it as ordered JSON messages.

This script drives the service in-process.  Against a real server
(``verseflow-serve --corpus demos/data/demo.silbe``) the same calls work
over the network.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from verseflow import PlanService, PlanStore, load_corpus
from verseflow.api import create_app

HERE = Path(__file__).parent
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

corpus = load_corpus(HERE / "data" / "demo.silbe")
service = PlanService(corpus, PlanStore(OUT / "plans"))
client = TestClient(create_app(service))

session = client.post("/sessions", json={"start": 0, "lines": 3, "seed": 7}).json()
sid = session["id"]
print(f"session {sid[:8]}...  armed={session['armed']}  plan={session['plan_id']}")

# Sliding anything but z changes the config without generating.
session = client.patch(f"/sessions/{sid}/params", json={"rho": 0.97}).json()
print(f"after rho patch: armed={session['armed']}  plan={session['plan_id']}")

# Generation before arming is refused.
refused = client.post(f"/sessions/{sid}/generate")
print(f"generate while z=0 -> {refused.status_code} {refused.json()['error']}")

# The z slider is the trigger: 0 -> 0.8 arms the session and generates.
session = client.patch(f"/sessions/{sid}/params", json={"z": 0.8}).json()
print(f"after z=0.8:     armed={session['armed']}  plan={session['plan_id']}")

# The stream replays the plan: header, one message per event, end marker.
print("\nstream messages:")
with client.stream("GET", f"/sessions/{sid}/stream") as response:
    for line in response.iter_lines():
        if not line.startswith("data: "):
            continue
        message = json.loads(line[len("data: "):])
        if message["type"] == "event":
            event = message["event"]
            print(f"  event: rate {event['rate']:7.2f}  vol {event['volume']:+.3f}"
                  f"  | {event['text']}")
        else:
            print(f"  {message['type']}")

# Plans persist by content hash and serve back byte-identically.
plan_doc = client.get(f"/plans/{session['plan_id']}")
print(f"\nGET /plans/{session['plan_id']} -> {plan_doc.status_code}, "
      f"{len(plan_doc.content)} bytes")
window = client.get("/corpus/lines", params={"start": 0, "count": 2}).json()
print(f"corpus window: {[ln['words'][0] for ln in window['lines']]} "
      f"of {window['total']} lines")
