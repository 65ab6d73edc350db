#!/usr/bin/env python3
# Copyright 2026 The RDFi Authors
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

"""Prepends the Apache-2.0 header to project sources. Idempotent."""

import pathlib
import sys

HEADER = """Copyright 2026 The RDFi Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

DIRS = ["core", "tools", "tests", "benchmarks", "scripts"]
SLASH = {".h", ".cc"}
HASH = {".cmake", ".in", ".py"}


def commented(prefix):
    lines = []
    for line in HEADER.splitlines():
        lines.append(prefix if not line else f"{prefix} {line}")
    return "\n".join(lines) + "\n\n"


def main(root):
    changed = 0
    for top in [root / d for d in DIRS] + [root]:
        paths = top.rglob("*") if top != root else top.glob("CMakeLists.txt")
        for path in paths:
            if not path.is_file() or "build" in path.parts:
                continue
            if path.suffix in SLASH:
                header = commented("//")
            elif path.suffix in HASH or path.name == "CMakeLists.txt":
                header = commented("#")
            else:
                continue
            text = path.read_text()
            if "Licensed under the Apache License" in text[:1000]:
                continue
            shebang = ""
            if text.startswith("#!"):
                shebang, _, text = text.partition("\n")
                shebang += "\n"
            path.write_text(shebang + header + text)
            changed += 1
    print(f"updated {changed} files")


if __name__ == "__main__":
    main(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".").resolve())
