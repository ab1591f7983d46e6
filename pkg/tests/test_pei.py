import pytest

from deckeval.pei import (
    PackageError,
    PeiConfig,
    build_fixture,
    evaluate_package_bytes,
    evaluate_pei,
    fixture_filename,
    gate_t1_text_integrity,
    gate_t2_vector,
    gate_t3_structure,
    gate_t4_parametric,
    gate_t5_cinematic,
    open_package,
    triage,
    with_member_removed,
    with_member_replaced,
)


class TestTriage:
    def test_static_formats(self):
        for name in ("deck.pdf", "slide.PNG", "a/b/page.jpg", "x.jpeg"):
            route = triage(name)
            assert route.route == "Static"
            assert route.max_level == "L0"

    def test_native_formats(self):
        for name in ("deck.pptx", "template.potx"):
            route = triage(name)
            assert route.route == "Native"
            assert route.max_level == "L5"

    def test_urls_route_to_web(self):
        route = triage("https://slides.example.com/deck/123")
        assert route.route == "Web"
        assert route.max_level == "L2"

    def test_sniff_pdf_magic(self):
        assert triage("mystery.bin", b"%PDF-1.7 ...").route == "Static"

    def test_sniff_zip_magic(self):
        assert triage("mystery.bin", b"PK\x03\x04rest").route == "Native"

    def test_unknown_format_lists_supported(self):
        with pytest.raises(ValueError, match=r"\.pptx"):
            triage("deck.key")


class TestOpenPackage:
    def test_minimal_fixture_inventory(self):
        pkg = open_package(build_fixture("l5"))
        assert len(pkg.slides) == 3
        assert len(pkg.layout_parts) == 1
        assert len(pkg.master_parts) == 1
        assert pkg.slide_width == 12192000

    def test_chart_inventory_with_workbook(self):
        pkg = open_package(build_fixture("l4"))
        assert len(pkg.charts) == 1
        chart = pkg.charts[0]
        assert chart.workbook_present
        assert chart.workbook_size > 0
        assert chart.workbook_target == "ppt/embeddings/data.xlsx"

    def test_truncated_zip_is_corrupt(self):
        with pytest.raises(PackageError, match="corrupt"):
            open_package(build_fixture("l5")[:100])

    def test_not_a_zip_is_corrupt(self):
        with pytest.raises(PackageError, match="corrupt"):
            open_package(b"this is not a zip archive")

    def test_missing_main_part_is_corrupt(self):
        import io
        import zipfile
        buf = io.BytesIO()
        with zipfile.ZipFile(buf, "w") as zf:
            zf.writestr("hello.txt", "nope")
        with pytest.raises(PackageError, match="main part"):
            open_package(buf.getvalue())

    def test_dangling_parts_are_defects_not_fatal(self):
        broken = with_member_removed(build_fixture("l5"), "ppt/slideLayouts/slideLayout1.xml")
        pkg = open_package(broken)
        assert pkg.defects
        assert len(pkg.slides) == 3


class TestGates:
    def test_t1_passes_real_paragraphs(self):
        pkg = open_package(build_fixture("l5"))
        result = gate_t1_text_integrity(pkg)
        assert result.passed
        assert result.evidence

    def test_t1_fails_fragmented_stack(self):
        pkg = open_package(build_fixture("t1_fragmented"))
        result = gate_t1_text_integrity(pkg)
        assert not result.passed
        assert any("text boxes" in text for _, text in result.evidence)

    def test_t1_fails_rasterized_deck(self):
        pkg = open_package(build_fixture("t1_rasterized"))
        result = gate_t1_text_integrity(pkg)
        assert not result.passed
        assert any("raster" in text for _, text in result.evidence)

    def test_t2_passes_vector_shapes(self):
        assert gate_t2_vector(open_package(build_fixture("l2"))).passed

    def test_t2_fails_raster_only(self):
        result = gate_t2_vector(open_package(build_fixture("l1")))
        assert not result.passed

    def test_t2_majority_rule_tolerates_one_photo(self):
        # vector icons plus one content photo still passes
        pkg = open_package(build_fixture("l1"))
        l5 = open_package(build_fixture("l5"))
        assert gate_t2_vector(l5).passed
        assert not gate_t2_vector(pkg).passed

    def test_t3_passes_master_deco(self):
        assert gate_t3_structure(open_package(build_fixture("l3"))).passed

    def test_t3_fails_duplicated_logo(self):
        result = gate_t3_structure(open_package(build_fixture("l2")))
        assert not result.passed
        assert any("duplicated" in text for _, text in result.evidence)

    def test_t3_fails_loose_shapes(self):
        result = gate_t3_structure(open_package(build_fixture("t3_ungrouped")))
        assert not result.passed
        assert any("loose" in text for _, text in result.evidence)

    def test_t3_grouping_satisfies_busy_slide(self):
        assert gate_t3_structure(open_package(build_fixture("t3_grouped"))).passed

    def test_t4_passes_native_chart(self):
        assert gate_t4_parametric(open_package(build_fixture("l4"))).passed

    def test_t4_fails_without_charts(self):
        result = gate_t4_parametric(open_package(build_fixture("l3")))
        assert not result.passed
        assert "no native chart" in result.evidence[0][1]

    def test_t4_fails_dangling_workbook(self):
        broken = with_member_removed(build_fixture("l4"), "ppt/embeddings/data.xlsx")
        result = gate_t4_parametric(open_package(broken))
        assert not result.passed
        assert any("dangles" in text for _, text in result.evidence)

    def test_t4_fails_empty_workbook(self):
        hollow = with_member_replaced(build_fixture("l4"), "ppt/embeddings/data.xlsx", b"")
        assert not gate_t4_parametric(open_package(hollow)).passed

    def test_t5_passes_transitions(self):
        assert gate_t5_cinematic(open_package(build_fixture("l5"))).passed

    def test_t5_fails_static_deck(self):
        result = gate_t5_cinematic(open_package(build_fixture("l4")))
        assert not result.passed
        assert "no slide transitions" in result.evidence[0][1]

    def test_t5_fails_external_media(self):
        result = gate_t5_cinematic(open_package(build_fixture("t5_external_media")))
        assert not result.passed
        assert any("external path" in text for _, text in result.evidence)


class TestEvaluate:
    LADDER = [("l0", "L0"), ("l1", "L1"), ("l2", "L2"),
              ("l3", "L3"), ("l4", "L4"), ("l5", "L5")]

    @pytest.mark.parametrize("kind,expected", LADDER)
    def test_ladder(self, kind, expected):
        report = evaluate_pei((fixture_filename(kind), build_fixture(kind)))
        assert report.level == expected

    def test_pdf_never_opens_package(self, monkeypatch):
        import deckeval.pei.report as report_module
        def explode(data):
            raise AssertionError("open_package must not run for static inputs")
        monkeypatch.setattr(report_module, "open_package", explode)
        report = evaluate_pei(("deck.pdf", build_fixture("l0")))
        assert report.level == "L0"
        assert all(g.passed is None for g in report.gates)

    def test_web_input_not_evaluable(self):
        report = evaluate_pei("https://example.com/deck")
        assert report.route.route == "Web"
        assert report.route.max_level == "L2"
        assert not report.evaluable
        assert report.level is None
        assert "interactive" in report.note

    def test_knockout_skips_higher_credit(self):
        # break the workbook of an otherwise-L5 deck: T4 fails, T5 unevaluated
        broken = with_member_removed(build_fixture("l5"), "ppt/embeddings/data.xlsx")
        report = evaluate_pei(("fixture_l5.pptx", broken))
        assert report.level == "L3"
        by_gate = {g.gate: g.passed for g in report.gates}
        assert by_gate == {"T1": True, "T2": True, "T3": True, "T4": False, "T5": None}

    def test_level_is_leading_pass_prefix(self):
        for kind, expected in self.LADDER[1:]:
            report = evaluate_pei((fixture_filename(kind), build_fixture(kind)))
            prefix = 0
            for gate in report.gates:
                if gate.passed:
                    prefix += 1
                else:
                    break
            assert f"L{prefix}" == expected
            after_failure = [g for g in report.gates[prefix + 1:]]
            assert all(g.passed is None for g in after_failure)

    def test_failed_gates_carry_evidence(self):
        report = evaluate_pei(("fixture_l2.pptx", build_fixture("l2")))
        failed = [g for g in report.gates if g.passed is False]
        assert failed and all(g.evidence for g in failed)

    def test_chart_round_trip_changes_level(self):
        # adding a resolvable chart to the L3 deck yields L4; removing the
        # workbook member lowers it back to L3
        l3 = evaluate_pei(("a.pptx", build_fixture("l3")))
        l4_bytes = build_fixture("l4")
        l4 = evaluate_pei(("b.pptx", l4_bytes))
        assert (l3.level, l4.level) == ("L3", "L4")
        back = with_member_removed(l4_bytes, "ppt/embeddings/data.xlsx")
        assert evaluate_pei(("c.pptx", back)).level == "L3"

    def test_determinism(self):
        data = build_fixture("l4")
        a = evaluate_pei(("deck.pptx", data)).to_dict()
        b = evaluate_pei(("deck.pptx", data)).to_dict()
        assert a == b

    def test_report_dict_shape(self):
        report = evaluate_pei(("deck.pptx", build_fixture("l5"))).to_dict()
        assert report["level"] == "L5"
        assert report["route"] == "Native"
        assert [g["gate"] for g in report["gates"]] == ["T1", "T2", "T3", "T4", "T5"]

    def test_config_thresholds_are_adjustable(self):
        # with an absurdly low grouping limit the L5 deck trips T3
        config = PeiConfig(grouping_shape_limit=2)
        report = evaluate_package_bytes(build_fixture("l5"),
                                        triage("deck.pptx"), config)
        assert report.level == "L2"
