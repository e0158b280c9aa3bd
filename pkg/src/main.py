"""Entry point for the GAFSV command-line interface."""

from src.cli.app import main


if __name__ == "__main__":
    main()
