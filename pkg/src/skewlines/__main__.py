from skewlines.cli import main

raise SystemExit(main())
