"""
Smoke check of the claspkit components; exits non-zero on the first failure
"""
print("=" * 60)
print("CLASPKIT - VERIFICATION")
print("=" * 60)

# Test 1: Import all modules
print("\n1. Testing module imports...")
try:
    from claspkit.checks import check_registry
    from claspkit.clasp_engine import KappaTable, clasp_exists_at, kappa_closed
    from claspkit.models import VerifyScope
    from claspkit.pipelines import run_verification
    from claspkit.render import format_rf
    from claspkit.root_data import Weight
    print("   ✅ All modules imported successfully")
except Exception as e:
    print(f"   ❌ Import failed: {e}")
    exit(1)

# Test 2: Check registry
print("\n2. Testing check registry...")
try:
    checks = check_registry.list_checks()
    print(f"   ✅ {len(checks)} checks registered: {', '.join(checks)}")
except Exception as e:
    print(f"   ❌ Check registry failed: {e}")
    exit(1)

# Test 3: A few closed forms
print("\n3. Testing closed forms...")
try:
    for lam, mu, expected in [
        (Weight(0, 1), Weight(0, -1), "[6][5]/([3][2])"),
        (Weight(1, 0), Weight(-1, 1), "-[2]"),
        (Weight(0, 1), Weight(2, -1), "-[4]/[2]"),
    ]:
        text = format_rf(kappa_closed(lam, mu))
        if text != expected:
            print(f"   ❌ kappa[{lam},{mu}] = {text}, expected {expected}")
            exit(1)
        print(f"   ✅ kappa[{lam},{mu}] = {text}")
except Exception as e:
    print(f"   ❌ Closed forms failed: {e}")
    exit(1)

# Test 4: Recursion against closed forms
print("\n4. Testing the recursion on a small grid...")
try:
    table = KappaTable("recursive")
    value = table.kappa(Weight(2, 2), Weight(0, -1))
    if value != kappa_closed(Weight(2, 2), Weight(0, -1)):
        print("   ❌ Recursion disagrees with the closed form at (2,2)")
        exit(1)
    print(f"   ✅ Recursion agrees, {len(table)} values memoized")
except Exception as e:
    print(f"   ❌ Recursion failed: {e}")
    import traceback
    traceback.print_exc()
    exit(1)

# Test 5: Full verification pipeline
print("\n5. Testing the verification pipeline...")
try:
    response = run_verification(VerifyScope.ALL, grid=4)
    if not response.passed:
        print(f"   ❌ Verification failed: {response.error}")
        exit(1)
    print(f"   ✅ {len(response.certificates)} symbolic certificates verified")
    print(f"   - Grid values compared: {response.grid_report.compared}")
    print(f"   - Stages run: {len(response.execution_log)}")
except Exception as e:
    print(f"   ❌ Pipeline failed: {e}")
    import traceback
    traceback.print_exc()
    exit(1)

# Test 6: Existence at a root of unity
print("\n6. Testing clasp existence...")
try:
    report = clasp_exists_at(Weight(0, 2), 5)
    if report.exists:
        print("   ❌ The (0,2) clasp should not exist at ell=5")
        exit(1)
    print(f"   ✅ (0,2) at ell=5 fails at {report.failing_key}")
except Exception as e:
    print(f"   ❌ Existence check failed: {e}")
    exit(1)

# Test 7: FastAPI app structure
print("\n7. Testing FastAPI app...")
try:
    from claspkit.main import app

    routes = [route.path for route in app.routes if hasattr(route, 'path')]
    print(f"   ✅ FastAPI app loaded successfully")
    print(f"   - Available endpoints: {len(routes)}")
    print(f"   - Key routes: /kappa, /verify, /expand/{{a}}/{{b}}, /fusion/{{ell}}")
except Exception as e:
    print(f"   ❌ FastAPI app test failed: {e}")
    exit(1)

print("\n" + "=" * 60)
print("ALL CHECKS PASSED ✅")
print("=" * 60)
print("\nNext steps:")
print("  1. Start server: python -m uvicorn claspkit.main:app --reload")
print("  2. Visit: http://localhost:8000/docs")
print("  3. Run the test suite: pytest")
print("=" * 60)
