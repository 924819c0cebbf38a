"""Build the extension with cargo, import it and exercise the main calls.

    python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "immerse-python"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libimmerse.so"
    dest = pathlib.Path(tempfile.mkdtemp()) / "immerse.so"
    shutil.copy(lib, dest)
    sys.path.insert(0, str(dest.parent))


def main():
    build()
    import immerse

    c5 = immerse.Graph.from_graph6("Dhc")
    assert c5 == immerse.cycle(5)
    assert c5.n == 5 and c5.edge_count() == 5
    assert immerse.chromatic_number(c5)[0] == 3
    assert immerse.independence_number(c5)[0] == 2
    assert immerse.clique_number(c5)[0] == 2
    assert len(immerse.maximum_matching(c5)) == 2
    assert immerse.hamiltonian_cycle(c5) is not None
    assert immerse.hamiltonian_cycle(immerse.petersen()) is None
    assert set(immerse.one_factorization(4).values()) == {1, 2, 3}

    c7_bar = immerse.cycle(7).complement()
    cert = immerse.construct("third", c7_bar)
    assert immerse.verify(cert)["summary"] == "valid strong immersion of K_3"
    cert = immerse.construct("multipartite", sizes=[2, 2, 2])
    assert json.loads(cert)["host"] == "E]~o"
    assert immerse.verify(cert)["strong"]

    assert immerse.oracle_paths(c5, immerse.complete(4)) is None
    assert immerse.oracle_lifts(c5, immerse.complete(3))
    t, definitive, _, _ = immerse.max_clique_immersion_of(c7_bar)
    assert (t, definitive) == (5, True)

    try:
        immerse.oracle_paths(immerse.complete_multipartite([2, 2, 2]), immerse.complete(5), budget=3)
    except immerse.BudgetExceededError:
        pass
    else:
        raise AssertionError("budget not enforced")

    assert len(immerse.alpha2_enumerate(3)) == 7
    g = immerse.alpha2_random(10, 42)
    assert g.independent_triple() is None
    report = immerse.property_battery(immerse.complete(7), full=True)
    assert report["excluded"]
    verdict, cert = immerse.half_clique_check(c7_bar)
    assert verdict == "holds" and immerse.verify(cert)["valid"]
    hunt = immerse.hunt("enumerate", 5)
    assert hunt["survivors"] == [] and hunt["half_clique"]["fails"] == 0

    print("python smoke test passed")


if __name__ == "__main__":
    main()
