"""Allow ``python -m tripurify``."""

from tripurify.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
