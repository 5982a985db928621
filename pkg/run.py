import sys

from dotenv import load_dotenv

if __name__ == "__main__":
    load_dotenv()

    from app.main import main

    sys.exit(main())
