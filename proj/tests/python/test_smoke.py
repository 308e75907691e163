"""Smoke checks for the cpsat extension module (run with PYTHONPATH set to the
build output directory)."""

import cpsat


def main() -> None:
    f = cpsat.parse_dimacs("p cnf 2 2\n1 0\n-1 2 0\n")
    assert f.variables == 2 and f.clauses == 2, repr(f)

    report = cpsat.solve(f)
    assert report["verdict"] == "satisfiable", report
    assert 0.0 < report["error_bound"] < 1.0, report
    assert report["evidence"][0]["root_value"] not in (None, 0), report

    cert = cpsat.extract_certificate(f)
    assert cert == [True, True], cert
    assert cpsat.model_count(f) == 1
    assert cpsat.enumerate_profile(f) == [0, 3, 1]

    contradiction = cpsat.parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")
    assert cpsat.solve(contradiction)["verdict"] == "likely-unsatisfiable"
    assert cpsat.model_count(contradiction) == 0

    paper = cpsat.solve(f, mode="paper")
    assert paper["verdict"] == "indeterminate", paper
    assert paper["evidence"][0]["singular_combiners"] >= 1, paper
    assert paper["evidence"][0]["root_value"] is None, paper

    assert cpsat.next_prime(16) == 17
    assert cpsat.clause_poly_coeffs("x0|~x1", 3, 17) == [1, 1, 0, 1, 1, 1, 0, 1]
    assert cpsat.eval_clause("x0", 2, 3, 17) == 13
    assert cpsat.eval_clause("x0", 2, 3, 17, doubling=1) == cpsat.eval_clause(
        "x0", 2, 9, 17
    )

    round_trip = cpsat.parse_dimacs(cpsat.serialize_dimacs(f))
    assert cpsat.solve(round_trip)["verdict"] == "satisfiable"

    g = cpsat.random_ksat(5, 8, 3, seed=42)
    assert g.variables == 5 and g.clauses == 8
    verdict = cpsat.solve(g)["verdict"]
    sat = cpsat.model_count(g) > 0
    assert verdict != "satisfiable" or sat

    print("smoke ok")


if __name__ == "__main__":
    main()
