"""
Unit tests for the command-line interface and output formatting
"""
import unittest
import pathlib
import io
import json
from math import pi
from unittest.mock import patch

import numpy as np

import sys
sys.path.insert(0, str(pathlib.Path(__file__).parent.parent))

from src.classifier.classifier import classify, classify_parameters
from src.formatter import canonical_json, format_report, report_csv, sweep_csv, to_json
from src.main import EXIT_INVALID_INPUT, EXIT_NOT_APPLICABLE, EXIT_OK, EXIT_USAGE, cli, parse_range
from src.polynomial.poly_core import MonicQuintic


def run(argv):
    """Run the CLI, returning (exit code, stdout, stderr)"""
    with patch('sys.stdout', new_callable=io.StringIO) as out, \
            patch('sys.stderr', new_callable=io.StringIO) as err:
        try:
            code = cli(argv)
        except SystemExit as e:
            code = e.code
    return code, out.getvalue(), err.getvalue()


class TestClassifyCommand(unittest.TestCase):
    """Test cases for `classify` and `quartic`"""

    def test_five_real_json(self):
        code, out, _ = run(["classify", "1", "0", "-5", "0", "5", "0", "--json"])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["n_real"], 5)
        self.assertEqual(data["method"], "TrigMethod")
        self.assertEqual(list(data)[:4], ["degree", "n_real", "n_complex", "n_int"])

    def test_json_is_canonical(self):
        """Parsing and re-dumping the output is byte-identical"""
        _, out, _ = run(["classify", "1", "0", "-5", "0", "1", "-5", "--format", "json"])
        self.assertEqual(canonical_json(out), out.rstrip("\n"))
        self.assertEqual(json.loads(out)["scenario"], "Thm2(b)")

    def test_m_zero_falls_back(self):
        code, out, _ = run(["classify", "1", "0", "0", "0", "0", "-1", "--json"])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["method"], "OracleFallback")
        self.assertEqual(data["n_real"], 1)
        self.assertIn("MethodNotApplicable", data["degenerate"])

    def test_text_output(self):
        code, out, _ = run(["classify", "1", "0", "-5", "1", "2", "5", "--verbose"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("real roots:    1", out)
        self.assertIn("Thm3(b)", out)
        self.assertIn("oracle count:  1", out)

    def test_csv_output(self):
        code, out, _ = run(["classify", "1", "0", "-5", "0", "5", "0", "--format", "csv"])
        self.assertEqual(code, EXIT_OK)
        header, row = out.strip().split("\n")
        self.assertTrue(header.startswith("degree,n_real,n_complex,n_int"))
        self.assertTrue(row.startswith("5,5,0,5"))

    def test_wrong_arity_is_usage_error(self):
        code, _, err = run(["classify", "1", "0", "-5"])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("usage", err)

    def test_non_numeric_is_invalid_input(self):
        code, _, err = run(["classify", "1", "0", "x", "0", "5", "0"])
        self.assertEqual(code, EXIT_INVALID_INPUT)
        self.assertIn("invalid input", err)

    def test_zero_leading_coefficient(self):
        code, _, _ = run(["classify", "0", "0", "-5", "0", "5", "0"])
        self.assertEqual(code, EXIT_INVALID_INPUT)

    def test_quartic(self):
        code, out, _ = run(["quartic", "1", "0", "-2", "0", "0.5", "--json"])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["degree"], 4)
        self.assertEqual(data["n_real"], 4)
        self.assertIsNone(data["beta"])

    def test_unknown_command(self):
        code, _, _ = run(["solve", "1"])
        self.assertEqual(code, EXIT_USAGE)


class TestPlotCommand(unittest.TestCase):
    """Test cases for `plot-f`"""

    def test_five_samples(self):
        code, out, _ = run(["plot-f", "1", "0", "-5", "0", "5", "0", "--samples", "5"])
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().split("\n")
        self.assertEqual(lines[0], "theta,f")
        rows = [tuple(map(float, line.split(","))) for line in lines[1:]]
        self.assertEqual(len(rows), 5)
        self.assertEqual(rows[0], (0.0, 1.0))
        self.assertAlmostEqual(rows[1][0], pi / 4.0, places=15)
        self.assertAlmostEqual(rows[1][1], -0.7071067811865476, places=12)
        self.assertAlmostEqual(rows[-1][1], -1.0, places=12)

    def test_one_real_example_is_positive(self):
        _, out, _ = run(["plot-f", "1", "0", "-5", "1", "2", "5", "--samples", "101"])
        values = [float(line.split(",")[1]) for line in out.strip().split("\n")[1:]]
        self.assertTrue(all(v > 0.0 for v in values))
        self.assertAlmostEqual(values[0], 2.5, places=12)

    def test_not_applicable(self):
        code, out, err = run(["plot-f", "1", "0", "0", "0", "0", "-1"])
        self.assertEqual(code, EXIT_NOT_APPLICABLE)
        self.assertEqual(out, "")
        self.assertIn("oracle", err)

    def test_too_few_samples(self):
        code, _, _ = run(["plot-f", "1", "0", "-5", "0", "5", "0", "--samples", "1"])
        self.assertEqual(code, EXIT_USAGE)


class TestSweepCommand(unittest.TestCase):
    """Test cases for `sweep`"""

    def test_single_points(self):
        cases = [
            (["--alpha", "0:0:1", "--beta", "0:0:1", "--gamma", "0:0:1"], "0,0,0,5,1,-1"),
            (["--alpha", "0:0:1", "--beta=-4:-4:1", "--gamma=-2.5:-2.5:1"], "0,-4,-2.5,1,-5.5,0.5"),
            (["--alpha", "0:0:1", "--beta", "0:0:1", "--gamma", "10:10:1"], "0,0,10,0,11,9"),
        ]
        for args, expected in cases:
            code, out, _ = run(["sweep", *args])
            self.assertEqual(code, EXIT_OK)
            header, row = out.strip().split("\n")
            self.assertEqual(header, "alpha,beta,gamma,n_int,f0,fpi")
            self.assertEqual(row, expected)

    def test_grid_rows_in_order(self):
        _, out, _ = run(["sweep", "--alpha", "0:1:2", "--beta", "0:0:1", "--gamma=-1:1:3"])
        rows = out.strip().split("\n")[1:]
        self.assertEqual(len(rows), 6)
        self.assertTrue(rows[0].startswith("0,0,-1,"))
        self.assertTrue(rows[3].startswith("1,0,-1,"))

    def test_sweep_matches_classify(self):
        """Single-point sweep at a quintic's (alpha, beta, gamma) gives its n_int"""
        rng = np.random.default_rng(61)
        inputs = [[1, 0, -5, 0, 5, 0], [1, 0, -5, 0, 1, -5], [1, 0, -5, 1, 2, 5]]
        inputs += [[1.0, *rng.uniform(-10.0, 10.0, size=5)] for _ in range(20)]
        compared = 0
        for coeffs in inputs:
            code, out, _ = run(["classify", *map(repr, map(float, coeffs)), "--json"])
            self.assertEqual(code, EXIT_OK)
            data = json.loads(out)
            if data["method"] != "TrigMethod":
                continue
            axes = [f"--{name}={data[name]!r}:{data[name]!r}:1" for name in ("alpha", "beta", "gamma")]
            code, out, _ = run(["sweep", *axes])
            self.assertEqual(code, EXIT_OK)
            row = out.strip().split("\n")[1].split(",")
            self.assertEqual(int(row[3]), data["n_int"])
            compared += 1
        self.assertGreaterEqual(compared, 3)

    def test_bad_range(self):
        code, _, _ = run(["sweep", "--alpha", "0:1", "--beta", "0:0:1", "--gamma", "0:0:1"])
        self.assertEqual(code, EXIT_USAGE)

    def test_parse_range(self):
        self.assertEqual(parse_range("-1:2:5"), (-1.0, 2.0, 5))


class TestOracleCommand(unittest.TestCase):
    """Test cases for `oracle`"""

    def test_one_real(self):
        code, out, _ = run(["oracle", "1", "0", "-5", "1", "2", "5", "--json"])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["n_real"], 1)
        self.assertAlmostEqual(data["roots"][0], -2.335, places=3)
        self.assertEqual(data["cauchy_bound"], 6.0)

    def test_low_degree(self):
        code, out, _ = run(["oracle", "1", "0", "-1"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("real roots:    2", out)

    def test_zero_polynomial(self):
        code, _, _ = run(["oracle", "0", "0", "0"])
        self.assertEqual(code, EXIT_INVALID_INPUT)

    def test_too_many_coefficients(self):
        code, _, _ = run(["oracle", "1", "0", "0", "0", "0", "0", "0"])
        self.assertEqual(code, EXIT_USAGE)


class TestFormatter(unittest.TestCase):
    """Test cases for report rendering"""

    def setUp(self):
        self.report = classify(MonicQuintic.from_coefficients([1, 0, -5, 0, 1, -5]))

    def test_json_round_trip(self):
        text = to_json(self.report)
        self.assertEqual(canonical_json(text), text)
        self.assertEqual(type(self.report).model_validate_json(text), self.report)

    def test_text_has_twelve_decimals(self):
        self.assertIn("f(0), f(pi):   -5.500000000000, 0.500000000000", format_report(self.report))

    def test_verbose_adds_brackets(self):
        self.assertNotIn("bracket:", format_report(self.report))
        self.assertIn("bracket:", format_report(self.report, verbose=True))

    def test_report_csv_has_no_lists(self):
        header = report_csv(self.report).split("\n")[0].split(",")
        self.assertIn("scenario", header)
        self.assertNotIn("roots", header)

    def test_sweep_csv_precision(self):
        row = classify_parameters(0.1, 0.0, 0.0)
        line = sweep_csv([row]).split("\n")[1]
        self.assertTrue(line.startswith("0.10000000000000001,"))
        self.assertEqual(float(line.split(",")[4]), np.float64(0.1) + 1.0)


if __name__ == '__main__':
    unittest.main()
