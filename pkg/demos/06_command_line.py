"""The same computations from the command line.

Equivalent shell commands:

    visangle body-info --body ellipse:1.5,1
    visangle integrate --body circle:1 --f crofton --method all
    visangle integrate --body random --seed 11 --f masotti,hurwitz:3 --format csv
    visangle bounds --body cw3:1,0.05 --m 2..6
    visangle verify --only kernel-derivative,masotti-odd-beta

Exit status is 0 when everything agrees, 1 on a numerical disagreement or a
violated bound, 2 on invalid input.
"""
from visangle.cli import main

for argv in (
    ["body-info", "--body", "ellipse:1.5,1"],
    ["integrate", "--body", "circle:1", "--f", "crofton", "--method", "all"],
    ["integrate", "--body", "random", "--seed", "11", "--f", "masotti,hurwitz:3", "--format", "csv"],
    ["bounds", "--body", "cw3:1,0.05", "--m", "2..4"],
    ["verify", "--only", "kernel-derivative,masotti-odd-beta"],
    ["integrate", "--body", "circle:1", "--f", "sinpow:2"],
):
    print("$ visangle " + " ".join(argv))
    code = main(argv)
    print(f"[exit {code}]\n")
