"""Module entry point: python -m coopcolor ..."""

from .cli import entry

if __name__ == "__main__":
    entry()
