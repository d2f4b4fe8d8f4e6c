"""Write every catalog fixture at its default parameter into a directory.

    python3 scripts/write_fixtures.py OUTDIR

The files use the diagram, presentation and pattern text formats, so they
can be fed straight back to ``python3 -m handleknot``.
"""

import sys
from pathlib import Path

from handleknot.cli import run
from handleknot.fixtures import CATALOG


def main(outdir: str) -> int:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name in CATALOG:
        target = out / f"{name}.txt"
        rc = run(["fixtures", name, "--out", str(target)])
        if rc:
            return rc
        print(target)
    return 0


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    sys.exit(main(sys.argv[1]))
