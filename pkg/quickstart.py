"""
Quick start script: one clasp expansion and its fate at a root of unity
"""
from claspkit.clasp_engine import clasp_exists_at, expansion_certificate
from claspkit.render import format_rf
from claspkit.root_data import Weight


def main():
    print("=" * 60)
    print("CLASPKIT - QUICK START EXAMPLE")
    print("=" * 60)

    target = Weight(1, 1)

    # Expand the clasp
    print(f"\n1. Expanding the clasp of {target}...")
    certificate = expansion_certificate(target)
    print(f"   Path: {''.join(map(str, certificate.path))}")
    for step in certificate.steps:
        print(f"   {step.weight} + w{step.letter}: {len(step.corrections)} corrections")
        for correction in step.corrections:
            print(f"     mu={correction.mu} -> {correction.child}  kappa = {format_rf(correction.kappa)}")

    # Specialize at roots of unity
    print("\n2. Checking existence at q = exp(i pi / ell)...")
    for ell in (5, 6, 7):
        report = clasp_exists_at(target, ell)
        if report.exists:
            print(f"   ell={ell}: ✅ exists")
        else:
            print(f"   ell={ell}: ❌ {report.failing_key} has vanishing {report.vanishing}")
        if report.negligible_steps:
            print(f"     negligible on the path: {', '.join(str(w) for w in report.negligible_steps)}")

    print("\n" + "=" * 60)
    print("Example completed! Now try:")
    print("  1. The CLI: python -m claspkit verify --grid 6")
    print("  2. The API server: uvicorn claspkit.main:app --reload")
    print("=" * 60)


if __name__ == "__main__":
    main()
