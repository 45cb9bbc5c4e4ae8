"""Subcommands, each exposing run(args, config) -> Outcome."""
