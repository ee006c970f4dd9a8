"""Smoke test for the neardomain_py extension.

Build with `maturin develop -m crates/python/Cargo.toml`, or copy
target/<profile>/libneardomain_py.so next to this file as neardomain_py.so.
"""

import json

import neardomain_py as nd


def main():
    gf3 = nd.PhiSystem.from_json('{"n":3,"mul":[[1,2],[2,1]],"inv":[1,2],"phi":[1,0,2]}')
    assert gf3.phi == [1, 0, 2]
    report = gf3.validate()
    assert report["passed"], report["text"]

    bad = nd.PhiSystem.from_json('{"n":3,"mul":[[1,2],[2,1]],"inv":[1,2],"phi":[2,0,1]}')
    f4 = [c for c in bad.validate()["reports"][0]["checks"] if c["name"] == "F4"][0]
    assert not f4["passed"] and f4["counterexample"]["cell"] == [1, 2]

    gf5 = nd.PhiSystem.standard(5)
    g = gf5.build_group()
    assert g.order == 20
    assert gf5.roundtrip2()["passed"]
    assert gf5.roundtrip2((3, 2))["passed"]

    d = gf5.f_l_map([4, 3, 2, 1])
    assert d.validate()["passed"]
    assert d.a_map() == gf5
    assert d.classify()["additive_associative"]

    ex = nd.NearDomain.example(5, "scaling", 2)
    assert ex.add(1, 1) == 3
    assert ex.lemma()["passed"]
    assert nd.verify_example(7, "scaling", 3)["passed"]
    inverse = nd.verify_example(5, "inverse")
    assert not inverse["passed"]
    print("inverse family r formula:", inverse["text"].splitlines()[-1].strip())

    perms = {"degree": 5, "perms": g.permutations(), "base": [1, 0]}
    rec = nd.from_group(json.dumps(perms))
    assert rec.validate()["passed"] and rec.n == 5

    result = nd.search(q=5)
    assert result["census"]["representatives"] == 1
    assert len(result["survivors"]) == 2

    try:
        nd.search(q=8)
    except ValueError as e:
        assert "cap" in str(e)
    else:
        raise AssertionError("search above the cap should be refused")

    print("smoke test passed")


if __name__ == "__main__":
    main()
