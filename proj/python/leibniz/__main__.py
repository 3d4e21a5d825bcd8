import sys

from ._core import LeibnizError, cli


def main(argv=None):
    try:
        code, text = cli(sys.argv[1:] if argv is None else argv)
    except LeibnizError as e:
        print(e, file=sys.stderr)
        return 3
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
