import pytest

from wordrep import config
from wordrep.utils.data_loader import Erratum, load_reference_counts, load_reference_errata


# -----------------------------
# 1. Shipped reference counts
# -----------------------------
def test_shipped_reference_counts():
    counts = load_reference_counts()
    assert counts[(3, 5)]["S"] == 26168
    assert counts[(3, 5)]["P"] == 2678973711602
    assert counts[(2, 3)] == {"P": 5653, "H": 107, "V": 197, "R": 107, "S": 23}


def test_blank_cells_are_left_out():
    counts = load_reference_counts()
    assert "S" not in counts[(3, 1)]
    assert counts[(3, 1)]["W"] == 19


def test_shipped_rows_carry_the_corrected_2x5_values():
    counts = load_reference_counts()
    assert counts[(2, 5)]["H"] == 7770
    assert counts[(2, 5)]["R"] == 7770


# -----------------------------
# 2. Errata
# -----------------------------
def test_shipped_errata():
    assert load_reference_errata() == [
        Erratum(m=2, n=5, quantity="H", published=770, corrected=7770),
        Erratum(m=2, n=5, quantity="R", published=770, corrected=7770),
    ]


def test_errata_path_comes_from_config(tmp_path, monkeypatch):
    path = tmp_path / "errata.csv"
    path.write_text("m,n,quantity,published,corrected\n3,1,w,20,19\n")
    monkeypatch.setattr(config, "REFERENCE_ERRATA_FILE", str(path))
    assert load_reference_errata() == [Erratum(m=3, n=1, quantity="W", published=20, corrected=19)]


def test_errata_reject_unknown_quantities(tmp_path):
    path = tmp_path / "errata.csv"
    path.write_text("m,n,quantity,published,corrected\n2,5,Q,770,7770\n")
    with pytest.raises(ValueError):
        load_reference_errata(str(path))


# -----------------------------
# 3. Custom files
# -----------------------------
def test_custom_file(tmp_path):
    path = tmp_path / "counts.csv"
    path.write_text("m,n,P,H,V,R,S,W\n1,1,2,2,2,2,2,\n")
    assert load_reference_counts(str(path)) == {(1, 1): {"P": 2, "H": 2, "V": 2, "R": 2, "S": 2}}


@pytest.mark.parametrize(
    "loader, text",
    [(load_reference_counts, "m,n,P\n1,1,2\n"), (load_reference_errata, "m,n,quantity\n2,5,H\n")],
)
def test_missing_column(loader, text, tmp_path):
    path = tmp_path / "data.csv"
    path.write_text(text)
    with pytest.raises(ValueError):
        loader(str(path))
