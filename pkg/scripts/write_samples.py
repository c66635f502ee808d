"""Write the built-in instances as JSON files for use with the CLI."""

import argparse
from pathlib import Path

from delaycode import io
from delaycode.codetuple import uniform
from delaycode.samples import all_empty, mirror_pair, sample_codetuple, sample_rct


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("outdir", nargs="?", default="samples")
    out = Path(p.parse_args().outdir)
    out.mkdir(parents=True, exist_ok=True)
    F = sample_codetuple()
    io.dump_json(io.codetuple_to_json(F, uniform(F.alphabet)), out / "codetuple.json")
    R = sample_rct()
    io.dump_json(io.rct_to_json(R, uniform(R.alphabet)), out / "rct.json")
    M = mirror_pair()
    io.dump_json(io.codetuple_to_json(M, uniform(M.alphabet)), out / "mirror.json")
    io.dump_json(io.codetuple_to_json(all_empty()), out / "all_empty.json")
    (out / "payload.txt").write_text("acdb\n")
    for f in sorted(out.iterdir()):
        print(f)


if __name__ == "__main__":
    main()
