"""
System Initialization and Verification Script
Verifies configuration, the worked examples, the substitution identities and a
short oracle-concordance run
"""
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src import config
from src.evaluation.experiments import ExperimentRunner


def print_header(text):
    """Print formatted header"""
    print("\n" + "="*60)
    print(f"  {text}")
    print("="*60)


def check_configuration():
    """Verify configuration"""
    print_header("[1/4] Configuration Check")

    issues = []
    positive = [
        ("ZERO_SNAP_TOLERANCE", config.ZERO_SNAP_TOLERANCE),
        ("EPS_TANGENT_FACTOR", config.EPS_TANGENT_FACTOR),
        ("U_MIN", config.U_MIN),
        ("BISECTION_TOLERANCE", config.BISECTION_TOLERANCE),
    ]
    for name, value in positive:
        if value is not None and value > 0:
            print(f"[OK] {name} = {value!r}")
        else:
            print(f"[ERROR] {name} must be positive, got {value!r}")
            issues.append(name)

    eps = config.resolve_eps_tangent()
    if eps is None:
        print("[OK] eps_tangent: relative (EPS_TANGENT_FACTOR * parameter scale)")
    elif eps > 0:
        print(f"[OK] eps_tangent: absolute override {eps!r}")
    else:
        print(f"[ERROR] CHEBROOT_EPS_TANGENT must be positive, got {eps!r}")
        issues.append("CHEBROOT_EPS_TANGENT")

    if config.THETA_SAMPLES >= 2:
        print(f"[OK] THETA_SAMPLES = {config.THETA_SAMPLES}")
    else:
        print(f"[ERROR] THETA_SAMPLES must be >= 2, got {config.THETA_SAMPLES}")
        issues.append("THETA_SAMPLES")

    if issues:
        print(f"\n[WARNING] Issues found: {', '.join(issues)}")
        return False

    print("\n[OK] All configuration checks passed!")
    return True


def check_golden_examples(runner):
    """Classify the worked examples"""
    print_header("[2/4] Golden Examples")

    outcomes = runner.run_golden_examples()
    for outcome in outcomes:
        icon = "[OK]" if outcome["passed"] else "[ERROR]"
        print(f"{icon} {outcome['name']}: n_real={outcome['n_real']}, "
              f"scenario={outcome['scenario']}, root error={outcome['root_error']:.2e}")
    return all(o["passed"] for o in outcomes)


def check_identities(runner):
    """Bridge and Chebyshev identities on theta grids"""
    print_header("[3/4] Identity Checks")

    summary = runner.run_bridge_identity_suite(polynomials=20, grid=200)
    limits = {
        "quintic_bridge": 1e-9,
        "quartic_bridge": 1e-10,
        "chebyshev_T5": 1e-12,
        "chebyshev_U4": 1e-12,
        "amplitude_excess": 1e-12,
    }
    ok = True
    for name, limit in limits.items():
        passed = summary[name] <= limit
        ok = ok and passed
        print(f"{'[OK]' if passed else '[ERROR]'} {name}: {summary[name]:.2e} (limit {limit:.0e})")
    return ok


def check_concordance(runner):
    """Short seeded oracle-concordance run"""
    print_header("[4/4] Oracle Concordance")

    try:
        quintic = runner.run_quintic_concordance()
        quartic = runner.run_quartic_concordance()
    except Exception as e:
        print(f"[ERROR] Concordance run failed: {e}")
        import traceback
        traceback.print_exc()
        return False

    ok = True
    for evaluation in (quintic, quartic):
        passed = (evaluation["agreement_rate"] == 1.0 and evaluation["flagged_rate"] <= 0.01
                  and evaluation["parity_violations"] == 0)
        ok = ok and passed
        print(f"{'[OK]' if passed else '[ERROR]'} {evaluation['system_name']}: "
              f"{evaluation['total']} polynomials, agreement {evaluation['agreement_rate']:.4f}, "
              f"flagged {evaluation['flagged_rate']:.4f}, "
              f"mean {evaluation['timing']['mean'] * 1e3:.3f} ms")
    return ok


def main():
    """Main initialization flow"""
    print("\n" + "="*60)
    print("  chebroot System Initialization")
    print("="*60)

    runner = ExperimentRunner(samples=500, show_progress=False)
    results = {
        "configuration": check_configuration(),
        "golden examples": False,
        "identities": False,
        "concordance": False,
    }
    if not results["configuration"]:
        print("\n[WARNING] Configuration issues found. Please fix before continuing.")
        return 1

    results["golden examples"] = check_golden_examples(runner)
    results["identities"] = check_identities(runner)
    results["concordance"] = check_concordance(runner)

    print_header("Initialization Summary")
    for component, status in results.items():
        icon = "[OK]" if status else "[ERROR]"
        print(f"{icon} {component.capitalize()}: {'Ready' if status else 'Not Ready'}")

    if all(results.values()):
        print("\n[SUCCESS] System verified and ready!")
        print("\nNext steps:")
        print("   1. Classify: python -m src.main classify 1 0 -5 0 5 0")
        print("   2. Full concordance: python -m src.main concordance --plots")
        print("   3. Use API: python -m uvicorn src.api.main:app --reload")
        return 0

    print("\n[WARNING] Some checks failed. See the messages above.")
    return 1


if __name__ == "__main__":
    sys.exit(main())
