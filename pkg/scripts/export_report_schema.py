#!/usr/bin/env python3
"""
Script para exportar el esquema JSON que pydantic deriva de los modelos del
informe, para compararlo con el esquema versionado del repositorio.
"""
import sys
import os
import json
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cli.models import CorpusReport, Report


def main():
    output = sys.argv[1] if len(sys.argv) > 1 else "reports/pydantic_report_schema.json"
    schema = {
        "report": Report.model_json_schema(),
        "corpus_report": CorpusReport.model_json_schema(),
    }
    os.makedirs(os.path.dirname(output), exist_ok=True)
    with open(output, "w", encoding="utf-8") as handle:
        json.dump(schema, handle, indent=2, ensure_ascii=False)
    print(f"✅ Esquema exportado en {output}")


if __name__ == "__main__":
    main()
