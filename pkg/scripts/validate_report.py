#!/usr/bin/env python3
"""
Script para validar informes JSON de lglab contra el esquema versionado
"""
import sys
import os
import json
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from jsonschema import Draft202012Validator

from config.settings import REPORT_SCHEMA_PATH


def load_validator() -> Draft202012Validator:
    with open(REPORT_SCHEMA_PATH, encoding="utf-8") as handle:
        return Draft202012Validator(json.load(handle))


def main():
    if len(sys.argv) < 2:
        print("Uso: validate_report.py <informe.json> [<informe.json> ...]")
        return 2

    validator = load_validator()
    failures = 0
    for path in sys.argv[1:]:
        with open(path, encoding="utf-8") as handle:
            errors = sorted(validator.iter_errors(json.load(handle)), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"❌ {path}")
            for error in errors:
                print(f"   - {'/'.join(map(str, error.path)) or '<raíz>'}: {error.message}")
        else:
            print(f"✅ {path}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
