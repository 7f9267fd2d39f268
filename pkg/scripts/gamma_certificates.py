"""Coboundary systems for each representative and t; prints verdicts and certificate supports."""

from tatemassey.group_algebra import GroupConfig
from tatemassey.secondary import KINDS, gamma_certificate, hand_obstruction


def main():
    for t in (2, 4, 8):
        for kind in KINDS:
            if kind == "m~" and t == 2:
                continue
            cert = gamma_certificate(GroupConfig(t), kind)
            line = f"t={t} {kind:4s} {cert.verdict:12s} system {cert.matrix.shape}"
            if cert.infeasible:
                hand = cert.functional_for(hand_obstruction(cert.variant))
                line += f"  hand combination valid: {cert.is_valid_obstruction(hand)}"
                line += f"  solver support: {len(cert.support())} triples"
            print(line)


if __name__ == "__main__":
    main()
