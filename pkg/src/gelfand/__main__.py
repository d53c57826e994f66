from gelfand.cli import main

raise SystemExit(main())
