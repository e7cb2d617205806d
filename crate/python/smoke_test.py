"""Smoke test for the nonsep extension module.

Build and install first:  pip install --no-build-isolation ./crates/py
"""

import json

import nonsep


def main():
    k8 = nonsep.Graph.named("complete:8")
    shape = nonsep.Shape("ps:2:5")
    assert (shape.kind, shape.r, shape.m) == ("ps", 2, 5)

    sol = nonsep.find(k8, shape)
    assert sol.tree.shape in shape.family()
    assert nonsep.verify(k8, sol.tree)
    print("ps:2:5 in K8:", sol.tree, sol.trace)

    d = nonsep.Graph.random_digraph(14, 6, seed=3)
    sol = nonsep.find(d, nonsep.Shape("ods:5:2:1"))
    assert nonsep.verify(d, sol.tree)
    print("ods:5:2:1 in random digraph:", sol.tree, "iterations", sol.iterations)

    c6 = nonsep.Graph.from_edge_list(nonsep.Graph.named("cycle:6").to_edge_list())
    assert c6.kappa() == 2
    try:
        nonsep.find(c6, nonsep.Shape("star:3"))
        raise AssertionError("expected a precondition failure")
    except nonsep.PreconditionError:
        pass
    assert nonsep.oracle(c6, nonsep.Shape("star:3")) is None
    try:
        nonsep.Shape("star:x")
        raise AssertionError("expected a parse failure")
    except ValueError:
        pass

    config = {"family": "random", "instances": 6, "n_min": 8, "n_max": 12, "shapes": ["is:3", "pds1:1:5"], "jobs": 2}
    reports = [json.loads(line) for line in nonsep.sweep(json.dumps(config))]
    assert len(reports) == 6
    assert all(r["outcome"] == "found" and r["verified"] for r in reports)
    print("sweep:", [r["outcome"] for r in reports])
    print("ok")


if __name__ == "__main__":
    main()
