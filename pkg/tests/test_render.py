from sepshape.core import Partition, Tableau
from sepshape.render import render_ferrers, render_tableau


def test_small_diagram():
    assert render_ferrers(Partition((2, 1))) == "■■\n■"


def test_empty_diagram():
    assert render_ferrers(Partition(())) == ""


def test_nine_row_diagram():
    lines = render_ferrers(Partition((9, 4, 3, 2, 1, 1, 1, 1, 1))).splitlines()
    assert [len(line) for line in lines] == [9, 4, 3, 2, 1, 1, 1, 1, 1]


def test_tableau_grid():
    assert render_tableau(Tableau(((1, 1, 2), (2, 2, 3), (4,)))) == "1 1 2\n2 2 3\n4"


def test_tableau_pads_wide_entries():
    out = render_tableau(Tableau(((1, 10), (2,))))
    assert out.splitlines() == [" 1 10", " 2"]


def test_empty_tableau():
    assert render_tableau(Tableau(())) == ""
