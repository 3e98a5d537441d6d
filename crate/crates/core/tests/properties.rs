mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use sashiko::analysis::SquareSymmetry;
use sashiko::kogin::{emit_chart, ChartRow, Run};
use sashiko::prelude::*;

fn bit_word(lines: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = String> {
    prop::collection::vec(any::<bool>(), lines)
        .prop_map(|v| v.into_iter().map(|b| if b { '1' } else { '0' }).collect())
}

fn words(max_lines: usize) -> impl Strategy<Value = (String, String)> {
    (bit_word(2..=max_lines), bit_word(2..=max_lines))
}

/// Words for square grids, where the axis-swapping symmetries apply.
fn square_words(max_lines: usize) -> impl Strategy<Value = (String, String)> {
    (2..=max_lines).prop_flat_map(|n| (bit_word(n..=n), bit_word(n..=n)))
}

fn chart(mode: ParityMode) -> impl Strategy<Value = KoginChart> {
    let row = prop::collection::vec((1usize..=3, 1usize..=7), 0..=4);
    prop::collection::vec(row, 1..=6).prop_map(move |rows| {
        let mut width = 1;
        let rows: Vec<ChartRow> = rows
            .into_iter()
            .map(|gaps_and_lengths| {
                let mut at = 0;
                let runs = gaps_and_lengths
                    .into_iter()
                    .map(|(gap, length)| {
                        let run = Run::new(at + gap - 1, length);
                        at = run.end() + 1;
                        run
                    })
                    .collect::<Vec<_>>();
                width = width.max(at);
                ChartRow { runs }
            })
            .collect();
        KoginChart {
            name: "random".into(),
            width,
            mode,
            rows,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn front_matches_running_stitch_rule((rows, cols) in words(12)) {
        let d = design(&rows, &cols);
        prop_assert_eq!(segs(d.front()), naive_front(&rows, &cols));
    }

    #[test]
    fn stitches_alternate_along_every_line((rows, cols) in words(12)) {
        let d = design(&rows, &cols);
        let (w, h) = (d.width(), d.height());
        for y in 0..=h {
            for x in 0..w.saturating_sub(1) {
                prop_assert_ne!(d.is_stitched(&Edge::h(x, y)), d.is_stitched(&Edge::h(x + 1, y)));
            }
        }
        for x in 0..=w {
            for y in 0..h.saturating_sub(1) {
                prop_assert_ne!(d.is_stitched(&Edge::v(x, y)), d.is_stitched(&Edge::v(x, y + 1)));
            }
        }
    }

    #[test]
    fn back_is_the_per_line_complement((rows, cols) in words(17)) {
        let d = design(&rows, &cols);
        let back = back_of(&d);
        prop_assert_eq!(back_of(&back), d.clone());
        let (f, b) = (segs(d.front()), segs(back.front()));
        prop_assert!(f.is_disjoint(&b));
        prop_assert_eq!(&f | &b, all_segments(d.width() as i64, d.height() as i64));
    }

    #[test]
    fn interior_vertices_have_degree_two((rows, cols) in words(17)) {
        let d = design(&rows, &cols);
        let deg = degrees(&segs(d.front()));
        for x in 1..d.width() as i64 {
            for y in 1..d.height() as i64 {
                prop_assert_eq!(deg.get(&(x, y)).copied().unwrap_or(0), 2);
            }
        }
    }

    #[test]
    fn decomposition_partitions_the_front((rows, cols) in words(17)) {
        let d = design(&rows, &cols);
        let parts = decompose(&d).unwrap();
        if let Err(e) = check_decomposition(&d, &parts) {
            prop_assert!(false, "{}", e);
        }
        let (loops, paths) = naive_loop_path_counts(&segs(d.front()));
        prop_assert_eq!((parts.loops.len(), parts.paths.len()), (loops, paths));
    }

    #[test]
    fn loop_areas_match_ray_casting_and_shoelace((rows, cols) in words(14)) {
        let d = design(&rows, &cols);
        for lp in decompose(&d).unwrap().loops {
            let boundary: BTreeSet<Seg> = lp.edges.iter().map(edge_seg).collect();
            let cast: BTreeSet<(u32, u32)> = ray_cast_cells(&boundary)
                .into_iter()
                .map(|(x, y)| (x as u32, y as u32))
                .collect();
            prop_assert_eq!(lp.cells(), &cast);
            let ring: Vec<Pt> = lp.vertices.iter().map(|p| (p.x as i64, p.y as i64)).collect();
            prop_assert_eq!(shoelace(&ring) as usize, lp.area);
            prop_assert_eq!(lp.polyomino.area(), lp.area);
            prop_assert!(lp.polyomino.is_edge_connected());
            prop_assert_eq!(polyomino_of(&lp), lp.polyomino.clone());
        }
    }

    #[test]
    fn nesting_is_a_forest_of_enclosures((rows, cols) in words(14)) {
        let parts = decompose(&design(&rows, &cols)).unwrap();
        for (i, parent) in parts.nesting.iter().enumerate() {
            let smallest = (0..parts.loops.len())
                .filter(|&j| j != i && parts.loops[i].cells().is_subset(parts.loops[j].cells()))
                .min_by_key(|&j| parts.loops[j].area);
            prop_assert_eq!(*parent, smallest);
            if let Some(p) = parent {
                prop_assert!(parts.loops[*p].area > parts.loops[i].area);
                prop_assert_eq!(parts.depth(i), parts.depth(*p) + 1);
            } else {
                prop_assert_eq!(parts.depth(i), 1);
            }
        }
        let deepest = (0..parts.loops.len()).map(|i| parts.depth(i)).max().unwrap_or(0);
        prop_assert_eq!(parts.max_depth(), deepest);
    }

    #[test]
    fn corner_tracing_agrees_with_decomposition(rows in bit_word(3..=14), cols in bit_word(3..=14)) {
        let d = design(&rows, &cols);
        let parts = decompose(&d).unwrap();
        let mut expected: Vec<BTreeSet<Edge>> = parts
            .loops
            .iter()
            .map(|l| l.edges.iter().copied().collect())
            .chain(parts.paths.iter().map(|p| p.edges.iter().copied().collect()))
            .collect();
        let mut traced = corner_map(&d).unwrap().trace_components(&d);
        expected.sort();
        traced.sort();
        prop_assert_eq!(traced, expected);
    }

    #[test]
    fn symmetry_report_is_sound_and_complete((rows, cols) in square_words(8)) {
        let d = design(&rows, &cols);
        let (w, h) = (d.width() as i64, d.height() as i64);
        let front = naive_front(&rows, &cols);
        let report = detect_symmetry(&d);
        for (g, name) in SquareSymmetry::ALL.into_iter().zip(SYMMETRY_NAMES) {
            let fixed = map_segments(name, &front, w, h) == front;
            prop_assert_eq!(fixed, report.contains(g), "{}", name);
        }
        for &a in &report.ops {
            for &b in &report.ops {
                prop_assert!(report.contains(a.compose(b)));
            }
        }
    }

    #[test]
    fn periods_divide_into_the_word((rows, cols) in words(17)) {
        let report = detect_symmetry(&design(&rows, &cols));
        for (w, p) in [(&rows, report.row_period), (&cols, report.col_period)] {
            let b = w.as_bytes();
            prop_assert!((0..b.len() - p).all(|i| b[i] == b[i + p]));
            prop_assert!((1..p).all(|q| (0..b.len() - q).any(|i| b[i] != b[i + q])));
        }
    }

    #[test]
    fn stats_agree_with_recount((rows, cols) in words(12)) {
        let d = design(&rows, &cols);
        let rec = stats(&d).unwrap();
        let front = segs(d.front());
        prop_assert_eq!(rec.h_edges + rec.v_edges, front.len());
        prop_assert_eq!((rec.loops, rec.paths), naive_loop_path_counts(&front));
        prop_assert_eq!(rec.area_histogram.values().sum::<usize>(), rec.loops);
    }

    #[test]
    fn validator_matches_naive_recheck(c in chart(ParityMode::Kogin), strict in any::<bool>()) {
        let strictness = if strict { Strictness::Strict } else { Strictness::Parity };
        let report = validate(&c, strictness);
        let naive: Vec<(usize, usize)> = c
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.runs.iter().enumerate().map(move |(k, run)| (r, k, run.length)))
            .filter(|&(_, _, len)| len % 2 == 0 || (strict && len > 5))
            .map(|(r, k, _)| (r, k))
            .collect();
        let got: Vec<(usize, usize)> = report.violations.iter().map(|v| (v.row, v.run)).collect();
        prop_assert_eq!(got, naive);
    }

    #[test]
    fn hishi_validator_wants_even_counts(c in chart(ParityMode::Hishi)) {
        let report = validate(&c, Strictness::Strict);
        let odd = c.rows.iter().flat_map(|r| &r.runs).filter(|r| r.length % 2 == 1).count();
        prop_assert_eq!(report.violations.len(), odd);
    }

    #[test]
    fn chart_text_round_trips(c in chart(ParityMode::Kogin)) {
        let text = emit_chart(&c);
        let parsed = parse_chart(&text).unwrap();
        prop_assert_eq!(&parsed, &c);
        prop_assert_eq!(emit_chart(&parsed), text);
    }

    #[test]
    fn pattern_text_round_trips((rows, cols) in words(20)) {
        let spec = DesignSpec::parse_words(&rows, &cols).unwrap();
        prop_assert_eq!(DesignSpec::from_pattern_text(&spec.to_pattern_text()).unwrap(), spec);
    }
}

#[test]
fn fronts_are_distinct_for_small_grids() {
    for m in 2..=4 {
        for n in 2..=4 {
            let mut seen = BTreeSet::new();
            for rows in all_words(n) {
                for cols in all_words(m) {
                    assert!(seen.insert(naive_front(&rows, &cols)));
                    assert_eq!(
                        segs(design(&rows, &cols).front()),
                        naive_front(&rows, &cols)
                    );
                }
            }
            assert_eq!(seen.len(), 1 << (m + n));
        }
    }
}

#[test]
fn loop_counts_match_naive_recount_at_four_by_four() {
    for rows in all_words(4) {
        for cols in all_words(4) {
            let parts = decompose(&design(&rows, &cols)).unwrap();
            let (loops, paths) = naive_loop_path_counts(&naive_front(&rows, &cols));
            assert_eq!(
                (parts.loops.len(), parts.paths.len()),
                (loops, paths),
                "{rows}/{cols}"
            );
        }
    }
}

#[test]
fn census_matches_brute_force_at_three_by_three() {
    let table = census(3, 3, CensusMode::Exhaustive, 1 << 10).unwrap();
    assert_eq!(table.rows.len(), 64);
    let mut expected = Vec::new();
    for rows in all_words(3) {
        for cols in all_words(3) {
            expected.push((
                rows.clone(),
                cols.clone(),
                naive_loop_path_counts(&naive_front(&rows, &cols)),
            ));
        }
    }
    let got: Vec<(String, String, (usize, usize))> = table
        .rows
        .iter()
        .map(|r| {
            (
                r.spec.rows.to_string(),
                r.spec.cols.to_string(),
                (r.loops, r.paths),
            )
        })
        .collect();
    assert_eq!(got, expected);
    let total_loops: u64 = table
        .loop_histogram
        .iter()
        .map(|(k, c)| *k as u64 * c)
        .sum();
    assert_eq!(
        total_loops,
        expected.iter().map(|e| e.2 .0 as u64).sum::<u64>()
    );
}

#[test]
fn snowflakes_have_four_fold_rotation() {
    for k in 0..=3 {
        let outline = build_snowflake(k).unwrap().outline();
        let (w, h) = (outline.width() as i64, outline.height() as i64);
        assert_eq!(w, h, "order {k}");
        let set = segs(&outline);
        assert_eq!(map_segments("rot90", &set, w, h), set, "order {k}");
        assert_eq!(set.len(), build_snowflake(k).unwrap().perimeter);
    }
}

#[test]
fn fibonacci_word_oracle() {
    // Unrolled by hand: 1, 10, 101, 10110, 10110101, 1011010110110.
    let expected = "1011010110110";
    for n in 1..=expected.len() {
        let got: String = sashiko::cli::fibonacci_word(n)
            .into_iter()
            .map(|b| if b { '1' } else { '0' })
            .collect();
        assert_eq!(got, expected[..n]);
    }
}
