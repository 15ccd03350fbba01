"""Audit loxodromic pairs in upper half-space against the displacement bar.

Run:  python3 demos/geometry_audit.py
"""

from dispbound import MoebiusMap, audit_pair, jorgensen_number, schottky_sample
from dispbound.hypgeom import schottky_certificate


def show(name: str, x: MoebiusMap, y: MoebiusMap) -> None:
    report = audit_pair(x, y)
    print(f"\n{name}")
    print(f"  certified Schottky pair: {schottky_certificate(x, y)}")
    print(f"  jorgensen number: {report['jorgensen']:.6f}"
          f"  (frame route {report['jorgensen_frame']:.6f})")
    print(f"  threshold: {report['threshold']:.6f}"
          f"   bound holds: {report['bound']}")
    print(f"  displacements at z2: "
          + ", ".join(f"{k}={v:.4f}" for k, v in report["disp"].items()))
    print(f"  hypothesis satisfied: {report['hypothesis']}"
          f"   (base-axis displacement comes first: "
          f"{report['ordering_base_first']})")
    print(f"  max shift displacement {report['shift_max']:.4f}"
          f" >= bar {report['half_log']:.4f}")


def main() -> None:
    xi = MoebiusMap(2.0, 0.0, 0.0, 0.5)
    eta = MoebiusMap(1.0, 1.0, 1.0, 2.0)
    print(f"worked pair jorgensen number: {jorgensen_number(xi, eta)}")
    show("worked pair", xi, eta)

    for i, (x, y) in enumerate(schottky_sample(3, seed=7)):
        show(f"sampled pair {i}", x, y)


if __name__ == "__main__":
    main()
