from claspkit.cli import main

raise SystemExit(main())
