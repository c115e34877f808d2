"""What the node-count lower bound says about growth classes.

The bound (interchangeable + 1) * 2^free rules out whole complexity
classes when the number of free coordinates grows with the dimension.
This script screens three invariance profiles: fully interchangeable,
fully free, and free count growing like log d.  Verdicts are finite-scale
statements about the sampled pairs, never limit claims.
"""

import math

from symquad import InvarianceProfile, evaluate_profile


def screen(name, samples):
    profile = InvarianceProfile(samples)
    report = evaluate_profile(profile, ((1.0, 1.0), (0.5, 0.5)))
    print(f"{name}")
    print(f"  {'d':>5} {'interchangeable':>16} {'free':>5} node-count")
    for (d, i), c in zip(report.profile.samples, report.node_counts):
        print(f"  {d:>5} {i:>16} {d - i:>5} {c}")
    for notion, verdict in report.verdicts.items():
        print(f"  {notion:<18} {verdict}")
    for (s, t), verdict in report.st_weak.items():
        print(f"  weak(s={s}, t={t})   {verdict}")
    print()


def main():
    dims = (4, 8, 16, 32, 64)
    screen("fully interchangeable (free count 0)", [(d, d) for d in dims])
    screen("no interchangeability (free count d)", [(d, 0) for d in dims])
    screen(
        "free count ~ log d",
        [(d, d - int(math.floor(math.log(d)))) for d in dims],
    )
    print("note: 'curse: consistent-at-scale' means the samples do indicate")
    print("exponential growth; 'excluded-at-scale' means they rule it out here.")


if __name__ == "__main__":
    main()
