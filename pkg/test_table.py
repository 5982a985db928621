"""
Tests for grid evaluation and table rendering
"""
import csv
import io
import json

import pytest
from pydantic import ValidationError

from app.schemas.homomorphism import ParityCase
from app.schemas.table import TableRow
from app.services.table_service import evaluate_cell, evaluate_grid, mismatches, render_csv, render_json


def test_rows_are_row_major():
    rows = evaluate_grid(3, 4)
    assert [(row.m, row.n) for row in rows] == [(m, n) for m in range(1, 4) for n in range(1, 5)]


def test_evaluate_cell_with_oracle():
    row = evaluate_cell(6, 4, with_oracle=True)
    assert (row.case, row.count, row.oracle, row.agree) == (ParityCase.EVEN_EVEN, 28, 28, True)


def test_table_row_agreement_is_enforced():
    with pytest.raises(ValidationError):
        TableRow(m=1, n=1, case=ParityCase.ODD_ODD, count=2, oracle=3, agree=True)
    with pytest.raises(ValidationError):
        TableRow(m=1, n=1, case=ParityCase.ODD_ODD, count=2, agree=True)


def test_mismatches():
    good = TableRow(m=1, n=1, case=ParityCase.ODD_ODD, count=2, oracle=2, agree=True)
    bad = TableRow(m=1, n=2, case=ParityCase.ODD_EVEN, count=4, oracle=5, agree=False)
    assert mismatches([good, bad]) == [bad]
    assert mismatches([TableRow(m=1, n=1, case=ParityCase.ODD_ODD, count=2)]) == []


def test_render_csv():
    text = render_csv(evaluate_grid(4, 3), with_oracle=False)
    lines = text.split("\n")
    assert lines[0] == "m,n,case,count"
    assert "1,1,OddOdd,2" in lines
    assert "3,3,OddOdd,10" in lines
    assert "4,3,EvenOdd,10" in lines
    assert text.endswith("\n") and "\r" not in text


def test_render_csv_with_oracle():
    text = render_csv(evaluate_grid(3, 3, with_oracle=True), with_oracle=True)
    lines = text.splitlines()
    assert lines[0] == "m,n,case,count,oracle,agree"
    assert "3,3,OddOdd,10,10,true" in lines


def test_render_json_schema():
    document = json.loads(render_json(evaluate_grid(2, 2), 2, 2))
    assert document["schema_version"] == 1
    assert document["grid"] == {"max_m": 2, "max_n": 2}
    assert document["rows"][0] == {"m": 1, "n": 1, "case": "OddOdd", "count": 2}
    assert len(document["rows"]) == 4


def test_csv_and_json_carry_the_same_counts():
    rows = evaluate_grid(6, 6, with_oracle=True)
    from_csv = {
        (int(rec["m"]), int(rec["n"]), int(rec["count"]))
        for rec in csv.DictReader(io.StringIO(render_csv(rows, with_oracle=True)))
    }
    from_json = {
        (rec["m"], rec["n"], rec["count"])
        for rec in json.loads(render_json(rows, 6, 6))["rows"]
    }
    assert from_csv == from_json


def test_parallel_evaluation_is_identical():
    sequential = evaluate_grid(8, 8, with_oracle=True, workers=1)
    parallel = evaluate_grid(8, 8, with_oracle=True, workers=2)
    assert render_csv(sequential, True) == render_csv(parallel, True)
