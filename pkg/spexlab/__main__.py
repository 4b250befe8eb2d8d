from spexlab.cli import main


raise SystemExit(main())
