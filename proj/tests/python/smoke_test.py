"""Smoke tests for the python bindings: the headline values and one call
into every exposed subsystem."""

import sys

import reeblens as rl


def test_rational():
    assert str(rl.Rational(8, 11)) == "8/11"
    assert rl.Rational("8/11") == rl.Rational(16, 22)
    assert rl.Rational(1, 3) + rl.Rational(1, 6) == rl.Rational(1, 2)
    assert float(rl.Rational(1, 2)) == 0.5


def test_lens_and_invariants():
    lens = rl.LensSpace(11, [1, 1, 1])
    assert lens.chern_order() == 11
    cls = lens.homotopy_class(5)
    assert cls.weights == [5, 5, 5]
    assert rl.k_a(lens, cls) == rl.Rational(8, 11)
    assert rl.h_a(lens, cls) == rl.Rational(30, 11)
    assert rl.h_tilde_a(lens, cls) == rl.Rational(30, 11)
    assert rl.positivity(lens, cls) == (True, True)

    l4 = rl.LensSpace(4, [1, 1])
    assert rl.k_a(l4, l4.homotopy_class(2)) == rl.Rational(1)
    assert rl.h_tilde_a(l4, l4.homotopy_class(2)) == rl.Rational(2)

    norm = rl.LensSpace(5, [2, 4])
    assert norm.weights == [1, 2]

    try:
        rl.LensSpace(4, [1, 2])
    except rl.ReeblensError as e:
        assert "NotCoprime" in str(e)
    else:
        raise AssertionError("expected NotCoprime")


def test_index_engine():
    path = rl.RotationPath([(rl.Rational(-5, 11), 32), (rl.Rational(160, 11), 1)])
    assert rl.cz_index(path) == -3
    assert rl.mean_index(path) == rl.Rational(0)

    bott = rl.BottFunction.from_path(path)
    assert bott.value_at_one == -3
    assert bott.max_excluding_one() == 30
    assert bott.sum_over_roots(7) == rl.cz_index(path.iterate(7))

    lens = rl.LensSpace(11, [1, 1, 1])
    cls = lens.homotopy_class(5)
    twist = rl.twist_ga(lens, cls)
    assert rl.BottFunction.from_path(twist).value_at_one == -3
    assert rl.ellipsoid_min_index(lens, cls) == rl.Rational(8, 11)

    l4 = rl.LensSpace(4, [1, 1])
    c1 = l4.homotopy_class(1)
    assert rl.toric_orbit_index(l4, c1, 1) == rl.Rational(2)
    assert rl.orbit_index(l4, c1, rl.toric_lift_path(l4, c1, 1)) == rl.Rational(2)


def test_esh():
    table = rl.graded_ranks(1, 2, 1, 2)
    assert [str(d) for d, _ in table.ranks] == ["1", "3", "5", "7"]
    assert table.min_degree() == rl.Rational(1)
    degrees, count = rl.carrier_degrees(3, 2)
    assert count == 2
    assert rl.iterate_index(2, 11, 1) == rl.Rational(-16, 11)


def test_dyn_verify():
    assert rl.delta_search(2, 4) == 4
    assert rl.delta_search(1, 3) is None
    assert rl.delta_fn(rl.Rational(1, 2)) == 1
    assert rl.hyperbolic_index_eq(2, 11, 5) == rl.Rational(8, 11)
    holds, sufficient = rl.dc_inequality_check(2, 4, 4, rl.Rational(1, 20), 4, rl.Rational(3))
    assert holds and sufficient

    lens = rl.LensSpace(11, [1, 1, 1])
    orbit = rl.OrbitRecord(
        lens,
        5,
        rl.Rational(1),
        rl.Rational(8, 11),
        0,
        [
            rl.SpectrumEntry(rl.SpectrumKind.hyperbolic, rl.Rational(2)),
            rl.SpectrumEntry(rl.SpectrumKind.hyperbolic, rl.Rational(2)),
        ],
    )
    assert rl.classify(orbit) == rl.OrbitClass.hyperbolic
    report = rl.check_main_theorem(orbit, False)
    assert not report.consistent()
    assert "hyperbolic_below_h_a" in report.violations

    data = rl.PinchingData(rl.Rational(1), rl.Rational(3, 2), 2, 3)
    assert rl.pinching_ok(data)
    assert rl.multiplicity_guarantee(data, rl.ConvexKind.h_pinched) == 2
    assert rl.multiplicity_guarantee(data, rl.ConvexKind.pinched_strictly_convex) == 4


def test_suites():
    ok, checks = rl.run_suite("examples")
    assert ok, [c for c in checks if not c[1]]


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
