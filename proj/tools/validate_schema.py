#!/usr/bin/env python3
# Copyright 2026 The Bandit Attack Lab Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Validate a bandit-attack-lab JSON output against the shipped schema.

Usage: validate_schema.py {summary,campaign,bounds} FILE [--schema PATH]
"""

import argparse
import json
import pathlib
import sys

import jsonschema

DEFAULT_SCHEMA = pathlib.Path(__file__).resolve().parent.parent / "schemas" / "bandit_lab.schema.json"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("kind", choices=["summary", "campaign", "bounds"])
    parser.add_argument("file", type=pathlib.Path)
    parser.add_argument("--schema", type=pathlib.Path, default=DEFAULT_SCHEMA)
    args = parser.parse_args()

    root = json.loads(args.schema.read_text())
    jsonschema.Draft202012Validator.check_schema(root)
    # Validate against one entry of $defs while keeping the root for $ref lookups.
    schema = dict(root)
    schema["$ref"] = f"#/$defs/{args.kind}_document"
    document = json.loads(args.file.read_text())
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(document),
                    key=lambda e: list(e.absolute_path))
    for err in errors:
        where = "/".join(str(p) for p in err.absolute_path) or "<root>"
        print(f"{args.file}: {where}: {err.message}", file=sys.stderr)
    if errors:
        return 1
    print(f"{args.file}: valid {args.kind} document")
    return 0


if __name__ == "__main__":
    sys.exit(main())
