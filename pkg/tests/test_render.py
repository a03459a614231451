import itertools
import xml.etree.ElementTree as ET

from rank4om.arrangement import build_ppc, init_configuration, insert_curve
from rank4om.realization import bipyramid_points, circle_picture
from rank4om.render import combinatorial_layout, face_polygon, render_svg

NS = "{http://www.w3.org/2000/svg}"


def inside(poly, x, y):
    hit = False
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        if (y1 > y) != (y2 > y) and x < x1 + (y - y1) * (x2 - x1) / (y2 - y1):
            hit = not hit
    return hit


def groups(svg, cls):
    root = ET.fromstring(svg)
    return [g for g in root.iter(NS + "g") if g.get("class") == cls]


def test_picture_svg_structure():
    pic, _ = circle_picture(bipyramid_points())
    svg = render_svg(pic)
    assert svg == render_svg(circle_picture(bipyramid_points())[0])
    curves = groups(svg, "curve")
    assert len(curves) == 10
    assert {g.get("data-triple") for g in curves} == {",".join(map(str, t))
                                                      for t in itertools.combinations(range(1, 6), 3)}
    assert [g.get("data-element") for g in groups(svg, "point")] == ["1", "2", "3", "4", "5"]


def test_map_svg_structure_and_determinism(bipyramid):
    cfg = build_ppc(bipyramid)
    svg = render_svg(cfg)
    assert svg == render_svg(build_ppc(bipyramid))
    assert len(groups(svg, "curve")) == 10 and len(groups(svg, "point")) == 5


def test_layout_outer_ring_on_unit_circle(bipyramid):
    cfg = build_ppc(bipyramid)
    lay = combinatorial_layout(cfg)
    ring = face_polygon(cfg, lay, lay.outer)
    assert all(abs(x * x + y * y - 1) < 1e-9 for x, y in ring)
    assert all(x * x + y * y < 1 + 1e-9 for x, y in lay.vertex_xy.values())


def test_floats_drawn_inside_their_face(cyclic):
    chi = cyclic[6]
    cfg = init_configuration(chi)
    for lam in itertools.islice(itertools.combinations(chi.elements, 3), 2):
        cfg = insert_curve(cfg, lam)
    assert set(cfg.floats) == {5, 6}
    lay = combinatorial_layout(cfg)
    face_of, _ = cfg.map.faces()
    assert lay.outer not in {face_of[d] for d in cfg.floats.values()}
    for e, d in cfg.floats.items():
        f = face_of[d]
        if f == lay.outer:
            assert lay.float_xy[e][0] > 1
        else:
            assert inside(face_polygon(cfg, lay, f), *lay.float_xy[e])
    assert len(groups(render_svg(cfg), "point")) == 6


def test_empty_configuration_renders(cyclic):
    svg = render_svg(init_configuration(cyclic[5]))
    assert len(groups(svg, "point")) == 5 and not groups(svg, "curve")
