"""
Inspecting a measurement from a file
====================================

POVMs round-trip through a small JSON format, so a measurement designed
elsewhere can be checked and analysed.
"""

import json
import tempfile
from pathlib import Path

import numpy as np

from swapinfo.experiments import inspect_povm
from swapinfo.povm import povm_from_file, povm_to_file, random_povm

rng = np.random.default_rng(7)
povm = random_povm(rng, 3)

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "random.json"
    povm_to_file(povm, path)
    print("file starts with:", path.read_text()[:60], "...")
    loaded = povm_from_file(path)

print("max round-trip error:", np.max(np.abs(loaded.elements - povm.elements)))

report = inspect_povm(loaded)
for o in report["outcomes"]:
    print(f"outcome {o['outcome']}: p={o['p']:.4f} I14={o['I14']:.4f} "
          f"I12={o['I12']:.4f} I34={o['I34']:.4f}")
print(json.dumps(report["averaged"], indent=2))
