#!/usr/bin/env python3
"""
Script para ejecutar el corpus empaquetado y guardar el informe agregado
"""
import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.settings import CORPUS_PATH
from src.cli.corpus import corpus_table, run_corpus


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else CORPUS_PATH
    output = sys.argv[2] if len(sys.argv) > 2 else "reports/corpus_report.json"

    print("🧪 Ejecutando corpus de lglab")
    print("=" * 50)
    print(f"📄 Corpus: {path}")

    report = run_corpus(path)
    print(corpus_table(report))

    os.makedirs(os.path.dirname(output), exist_ok=True)
    with open(output, "w", encoding="utf-8") as handle:
        handle.write(report.model_dump_json(indent=2))
    print(f"\n💾 Informe guardado en {output}")

    if report.passed:
        print(f"✅ {len(report.rows)} entradas correctas")
        return 0
    print(f"❌ Entradas fallidas: {', '.join(report.failures)}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
