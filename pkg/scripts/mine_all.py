"""Run the miner on every catalogued claim and tabulate where each witness turns up."""
import argparse
import json
import time

from fuzzytop.lab.miner import claim_ids, describe_claim, mine


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="one JSON object per claim")
    args = ap.parse_args()

    for cid in claim_ids():
        start = time.perf_counter()
        res = mine(cid, budget=args.budget, workers=args.workers)
        secs = time.perf_counter() - start
        if args.json:
            print(json.dumps({**res.to_json(), "seconds": round(secs, 3)}))
        else:
            status = res.short() if res.found else f"not found in {res.spaces_searched} spaces"
            print(f"{cid:38} {secs:6.2f}s  {status}")
            if not res.found:
                print(f"{'':38}          ({describe_claim(cid)})")


if __name__ == "__main__":
    main()
