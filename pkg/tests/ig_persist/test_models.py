# tests/ig_persist/test_models.py

import pytest
from pydantic import ValidationError

# Subject under test
from ig_persist.models import (
    SCHEMA_VERSION,
    BandSummary,
    CosetTableDocument,
    PipelineReport,
    VerdictRecord,
    VerificationSummary,
)

# Test Cases


def test_documents_serialize_the_schema_alias():
    """Tests that the schema version is written under the key "schema"."""
    # Arrange
    report = PipelineReport(stage="parse")

    # Act
    data = report.model_dump(by_alias=True)

    # Assert
    assert data["schema"] == SCHEMA_VERSION == 1
    assert "schema_version" not in data
    assert data["status"] == "pass"
    assert data["band"] is None


def test_documents_accept_either_name():
    """Tests that both "schema" and the field name populate the version."""
    # Act
    by_alias = PipelineReport.model_validate({"schema": 1, "stage": "build"})
    by_name = PipelineReport(schema_version=1, stage="build")

    # Assert
    assert by_alias == by_name


def test_pipeline_report_with_sections():
    """Tests a report filled up to the verification stage."""
    # Arrange
    report = PipelineReport(
        stage="verify",
        band=BandSummary(
            size=50, expected_size=50, formula_check="pass", kernel_size=40, upper_size=10, grid_shape=[8, 5]
        ),
        square_counts={"up-down": 72, "left-right": 10},
        verification=VerificationSummary(
            status="pass",
            input_order=8,
            output_order=8,
            checks=[VerdictRecord(name="orders", stage="group_engine", status="pass")],
        ),
    )

    # Act
    restored = PipelineReport.model_validate_json(report.model_dump_json(by_alias=True))

    # Assert
    assert restored == report
    assert restored.band is not None and restored.band.grid_shape == [8, 5]


def test_missing_required_fields_are_rejected():
    """Tests that a coset table document needs its action table."""
    # Act & Assert
    with pytest.raises(ValidationError):
        CosetTableDocument(n=1, generators=[], columns=[])
