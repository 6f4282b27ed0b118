"""How many of the corpus claims about the four-point example could any topology satisfy?

Every crisp topology on four points is scored against the stated memberships
of the named sets A, I, N, F, E, G, C, J. The shipped topology's score is
printed alongside the best achievable one.
"""
import argparse

from fuzzytop.classifier import verdict
from fuzzytop.lab.corpus import corpus_claims, corpus_space
from fuzzytop.lab.enumeration import enumerate_topologies
from fuzzytop.lattice import Grid


def score(tau, doc, claims):
    return sum(verdict(tau, doc.set(c.set), c.key) == c.expected for c in claims)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--top", type=int, default=5)
    args = ap.parse_args()

    doc = corpus_space("ex2_5")
    claims = [c for c in corpus_claims() if c.space == "ex2_5"]
    ranked = sorted(((score(t, doc, claims), t) for t in enumerate_topologies(doc.carrier, Grid.crisp())),
                    key=lambda p: -p[0])
    print(f"{len(ranked)} topologies scored against {len(claims)} claims")
    print(f"shipped topology: {score(doc.topology, doc, claims)}/{len(claims)}")
    for s, t in ranked[:args.top]:
        print(f"{s:>3}/{len(claims)}  {t.describe()}")
    perfect = [t for s, t in ranked if s == len(claims)]
    print(f"topologies satisfying every claim: {len(perfect)}")


if __name__ == "__main__":
    main()
