"""
Driving the command-line tool
=============================

Same pipeline as the other demos, through the ``enriques-salem`` entry
point.  Each call prints its output and exit status.
"""

import subprocess
import sys

calls = [
    ["orders", "--rank", "12"],
    ["verify", "1", "-1", "-1", "0", "0", "0", "0", "0", "-1", "-1", "1"],
    ["verify", "1", "0", "-1", "0", "1"],
    ["reduce", "1", "-6", "-7", "-9", "-6", "-10", "-6", "-9", "-7", "-6", "1"],
    ["enumerate", "--max-degree", "8", "--bound", "1.351"],
]
for args in calls:
    proc = subprocess.run([sys.executable, "-m", "enriques_salem", *args], capture_output=True, text=True)
    print("$ enriques-salem", " ".join(args))
    print(proc.stdout + proc.stderr, end="")
    print("exit", proc.returncode)
    print()
