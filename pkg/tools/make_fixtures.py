"""Regenerate the fixture library under fixtures/.

Each file carries a provenance comment and either a %perm block (compact,
for permutation-friendly groups) or a full %table block.  Rerunning the
script is idempotent; fixtures are committed so tests never depend on it.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from integra import abelian_group, cyclic, dihedral, modular_two_group, quaternion
from integra.groupfile import format_table

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def write(name: str, comment: str, body: str) -> None:
    path = FIXTURES / f"{name}.grp"
    path.write_text(f"# {comment}\n{body}")
    print(f"wrote {path}")


def cycle(points: list[int]) -> str:
    return "(" + " ".join(str(p) for p in points) + ")"


def long_cycle(n: int) -> str:
    return cycle(list(range(1, n + 1)))


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)

    for n in range(1, 33):
        write(f"c{n}", f"cyclic group of order {n}", format_table(cyclic(n)))

    write("v4", "Klein four-group C2 x C2", format_table(abelian_group([2, 2])))
    write("c2c2c2", "elementary abelian group C2 x C2 x C2",
          format_table(abelian_group([2, 2, 2])))

    write("s3", "symmetric group on 3 points",
          "%perm 3\n(1 2 3)\n(1 2)\n")
    write("a4", "alternating group on 4 points",
          "%perm 4\n(1 2 3)\n(1 2)(3 4)\n")
    write("s4", "symmetric group on 4 points",
          "%perm 4\n(1 2 3 4)\n(1 2)\n")
    write("a5", "alternating group on 5 points (order 60, simple)",
          "%perm 5\n(1 2 3 4 5)\n(1 2 3)\n")

    for n in range(3, 13):
        rotation = long_cycle(n)
        pairs = [cycle([i, n + 2 - i]) for i in range(2, n // 2 + 2) if i != n + 2 - i]
        write(f"d{n}", f"dihedral group of order {2 * n} on {n} points",
              f"%perm {n}\n{rotation}\n{''.join(pairs)}\n")

    write("q8", "quaternion group of order 8", format_table(quaternion()))

    # Modular 2-groups on points 1..2^(e-1): label x represents the residue
    # x-1, the first generator is translation by 1, the second multiplies by
    # 1 + 2^(e-2), which swaps each odd residue r with r + 2^(e-2) mod 2^(e-1).
    for exponent in (4, 5, 6):
        half = 2 ** (exponent - 1)
        quarter = 2 ** (exponent - 2)
        swaps = [
            cycle([r + 1, (r + quarter) % half + 1])
            for r in range(1, half, 2)
            if r < (r + quarter) % half
        ]
        body = f"%perm {half}\n{long_cycle(half)}\n{''.join(swaps)}\n"
        write(f"m{2 ** exponent}",
              f"modular group of order {2 ** exponent} (derived subgroup C2, cyclic center)",
              body)
        assert modular_two_group(exponent).n == 2 ** exponent


if __name__ == "__main__":
    main()
