//! Property tests for the algebraic identities the library leans on.

use proptest::prelude::*;

use sahar::metrology::{
    capacity_from_volume, decompose_capacity, storage_constant_tablet, Dimension, Quantity, Unit,
};
use sahar::sexagesimal::{
    is_regular, parse_sex, format_sex, FormatMode, SexDigits, SexRational,
};
use sahar::solids::{
    frustum_apex_extension, solve_grain_heap_top, volume_frustum_babylonian,
    volume_frustum_egyptian, volume_frustum_ngon, volume_grain_heap, volume_prism,
    volume_pyramid, volume_truncated_prism, GrainHeap, NgonFrustum, PrismSpec, PyramidSpec,
    SquareFrustum, TruncatedTriangularPrism,
};
use sahar::tablet::{parse_script, run, OutputDecl, Script, Step, Verdict};

fn rat(n: i64, d: i64) -> SexRational {
    SexRational::new(n, d).unwrap()
}

/// Any rational, denominators not restricted to regular numbers.
fn any_rational() -> impl Strategy<Value = SexRational> {
    (-1_000_000i64..1_000_000, 1i64..10_000).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = SexRational> {
    any_rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn positive_rational() -> impl Strategy<Value = SexRational> {
    (1i64..100_000, 1i64..1_000).prop_map(|(n, d)| rat(n, d))
}

/// A rational whose denominator is 2,3,5-smooth, so its sexagesimal
/// expansion terminates.
fn finite_rational() -> impl Strategy<Value = SexRational> {
    (
        -1_000_000i64..1_000_000,
        0u32..6,
        0u32..4,
        0u32..4,
    )
        .prop_map(|(n, a, b, c)| {
            rat(n, 2i64.pow(a) * 3i64.pow(b) * 5i64.pow(c))
        })
}

fn same_dimension_pair() -> impl Strategy<Value = (Unit, Unit)> {
    const LENGTH: [Unit; 3] = [Unit::Nindan, Unit::Gi, Unit::Kus];
    const VOLUME: [Unit; 2] = [Unit::Nindan3, Unit::Sar];
    const CAPACITY: [Unit; 3] = [Unit::Sila, Unit::Gur, Unit::Gur7];
    prop_oneof![
        (0usize..3, 0usize..3).prop_map(|(i, j)| (LENGTH[i], LENGTH[j])),
        (0usize..2, 0usize..2).prop_map(|(i, j)| (VOLUME[i], VOLUME[j])),
        (0usize..3, 0usize..3).prop_map(|(i, j)| (CAPACITY[i], CAPACITY[j])),
    ]
}

fn digit_groups(text: &str) -> Vec<u32> {
    text.trim_start_matches('-')
        .trim_end_matches('…')
        .split([',', ';'])
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().expect("digit group"))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn absolute_round_trip_on_smooth_denominators(q in finite_rational()) {
        let digits = SexDigits::of(&q).expect("finite by construction");
        prop_assert_eq!(parse_sex(&digits.to_string()).unwrap(), q);
    }

    #[test]
    fn reciprocal_involutes_and_multiplies_to_one(q in nonzero_rational()) {
        let r = q.reciprocal().unwrap();
        prop_assert_eq!(r.reciprocal().unwrap(), q.clone());
        prop_assert_eq!(&q * &r, SexRational::one());
    }

    #[test]
    fn regularity_matches_finite_reciprocal(n in 1u64..10_000) {
        let recip = SexRational::new(1, n as i64).unwrap();
        prop_assert_eq!(is_regular(n).unwrap(), recip.is_finite_sexagesimal());
    }

    #[test]
    fn emitted_digits_stay_in_range(q in any_rational()) {
        for mode in [FormatMode::Absolute, FormatMode::Floating] {
            let text = format_sex(&q, mode, 12);
            for group in digit_groups(&text) {
                prop_assert!(group < 60, "group {} in {:?}", group, text);
            }
        }
    }

    #[test]
    fn floating_never_ends_in_a_zero_word(q in finite_rational()) {
        prop_assume!(!q.is_zero());
        let text = q.to_floating();
        let groups = digit_groups(&text);
        prop_assert!(groups.last() != Some(&0), "{:?}", text);
    }

    #[test]
    fn field_laws(a in any_rational(), b in any_rational(), c in any_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn unit_conversion_round_trips(q in any_rational(), (from, to) in same_dimension_pair()) {
        let start = Quantity::new(q, from);
        let there = start.convert(to).unwrap();
        let back = there.convert(from).unwrap();
        prop_assert_eq!(&back.value, &start.value);
        prop_assert_eq!(there.in_base(), start.in_base());
    }

    #[test]
    fn decompose_recomposes_exactly(n in 0u64..100_000_000_000) {
        let q = Quantity::new(SexRational::from(n), Unit::Sila);
        let b = decompose_capacity(&q).unwrap();
        prop_assert!(b.gur() < 3_600);
        prop_assert!(!b.sila().is_negative());
        prop_assert!(b.sila() < &SexRational::from(300));
        prop_assert_eq!(b.recompose().value, SexRational::from(n));
    }

    #[test]
    fn capacity_from_volume_is_linear(a in positive_rational(), b in positive_rational()) {
        let constant = storage_constant_tablet();
        let f = |v: &SexRational| {
            capacity_from_volume(&Quantity::new(v.clone(), Unit::Sar), &constant)
                .unwrap()
                .value
        };
        prop_assert_eq!(f(&(&a + &b)), f(&a) + f(&b));
    }

    #[test]
    fn babylonian_equals_egyptian(
        b in positive_rational(),
        extra in positive_rational(),
        h in positive_rational(),
    ) {
        let a = &b + &extra;
        let f = SquareFrustum::new(a, b, h).unwrap();
        prop_assert_eq!(volume_frustum_babylonian(&f), volume_frustum_egyptian(&f));
    }

    #[test]
    fn square_ngon_equals_egyptian(
        b in positive_rational(),
        extra in positive_rational(),
        h in positive_rational(),
    ) {
        let a = &b + &extra;
        let f = SquareFrustum::new(a.clone(), b.clone(), h.clone()).unwrap();
        let n4 = NgonFrustum::new(4, a, b, h).unwrap();
        let v4 = volume_frustum_ngon(&n4, 20);
        prop_assert_eq!(v4.as_exact().unwrap(), &volume_frustum_egyptian(&f));
    }

    #[test]
    fn heap_equals_truncated_prism(x in positive_rational(), h in positive_rational()) {
        let heap = GrainHeap::new(x.clone(), h.clone()).unwrap();
        let two_h = &SexRational::from(2) * &h;
        let prism =
            TruncatedTriangularPrism::new(x, h.clone(), h.clone(), two_h, h).unwrap();
        prop_assert_eq!(volume_grain_heap(&heap).unwrap(), volume_truncated_prism(&prism));
    }

    #[test]
    fn pyramid_is_a_third_of_the_prism(
        base_area in positive_rational(),
        h in positive_rational(),
    ) {
        let prism = PrismSpec::new(base_area.clone(), h.clone()).unwrap();
        let pyramid = PyramidSpec::new(base_area, h).unwrap();
        prop_assert_eq!(
            volume_pyramid(&pyramid),
            volume_prism(&prism) / SexRational::from(3)
        );
    }

    #[test]
    fn truncated_prism_degenerations(
        x in positive_rational(),
        x1 in positive_rational(),
        x2 in positive_rational(),
        y in positive_rational(),
        h in positive_rational(),
    ) {
        let zero = SexRational::zero();
        let pure = TruncatedTriangularPrism::new(
            x.clone(), zero.clone(), zero.clone(), y.clone(), h.clone(),
        )
        .unwrap();
        let half = SexRational::new(1, 2).unwrap();
        prop_assert_eq!(volume_truncated_prism(&pure), &(&half * &x) * &(&y * &h));

        let wings_only =
            TruncatedTriangularPrism::new(zero, x1.clone(), x2.clone(), y.clone(), h.clone())
                .unwrap();
        let third = SexRational::new(1, 3).unwrap();
        let wings = &(&third * &(&x1 + &x2)) * &(&y * &h);
        prop_assert_eq!(volume_truncated_prism(&wings_only), wings);
    }

    #[test]
    fn solve_inverts_heap_volume(x in positive_rational(), h in positive_rational()) {
        let heap = GrainHeap::new(x.clone(), h.clone()).unwrap();
        let v = volume_grain_heap(&heap).unwrap();
        let solved = solve_grain_heap_top(
            &Quantity::new(v, Unit::Nindan3),
            &Quantity::new(h, Unit::Nindan),
        )
        .unwrap();
        prop_assert_eq!(solved, x);
    }

    #[test]
    fn apex_extension_gives_similar_triangles(
        b in positive_rational(),
        extra in positive_rational(),
        h in positive_rational(),
    ) {
        let a = &b + &extra;
        let f = SquareFrustum::new(a.clone(), b.clone(), h.clone()).unwrap();
        let apex = frustum_apex_extension(&f);
        prop_assert_eq!(&a * &apex, &b * &(&h + &apex));
    }
}

// Script round-trip and determinism on generated programs. Literals
// are kept 2,3,5-smooth so the canonical text re-parses to the same
// rationals.

#[derive(Debug, Clone)]
enum GenOp {
    Lit(SexRational),
    Double(usize),
    Halve(usize),
    Square(usize),
    Add(usize, usize),
    Mul(usize, usize),
    Sub(usize, usize),
}

#[derive(Debug, Clone, Copy)]
enum GenClaim {
    None,
    Correct,
    Wrong,
    WrongWithCorrection,
}

fn gen_op() -> impl Strategy<Value = GenOp> {
    let idx = 0usize..16;
    prop_oneof![
        finite_rational().prop_map(GenOp::Lit),
        idx.clone().prop_map(GenOp::Double),
        idx.clone().prop_map(GenOp::Halve),
        idx.clone().prop_map(GenOp::Square),
        (0usize..16, 0usize..16).prop_map(|(a, b)| GenOp::Add(a, b)),
        (0usize..16, 0usize..16).prop_map(|(a, b)| GenOp::Mul(a, b)),
        (0usize..16, 0usize..16).prop_map(|(a, b)| GenOp::Sub(a, b)),
    ]
}

fn gen_claim() -> impl Strategy<Value = GenClaim> {
    prop_oneof![
        Just(GenClaim::None),
        Just(GenClaim::Correct),
        Just(GenClaim::Wrong),
        Just(GenClaim::WrongWithCorrection),
    ]
}

/// Builds a well-formed script whose step values we can predict, so
/// claims with known verdicts can be attached.
fn build_script(ops: Vec<(GenOp, GenClaim)>) -> (Script, Vec<Verdict>) {
    let mut steps = Vec::new();
    let mut values: Vec<SexRational> = Vec::new();
    let mut expected = Vec::new();
    let offset = SexRational::new(1, 2).unwrap();
    for (i, (op, claim_kind)) in ops.into_iter().enumerate() {
        let reg = |k: usize| format!("r{}", k % values.len().max(1));
        let prev = |k: usize| values[k % values.len()].clone();
        let text = |name: &str, operands: &[String]| -> String {
            format!("r{i} := {name} {}", operands.join(" "))
        };
        let (mut line, value) = if values.is_empty() {
            let v = match &op {
                GenOp::Lit(v) => v.clone(),
                _ => SexRational::one(),
            };
            (text("LIT", &[v.to_absolute_exact()]), v)
        } else {
            match op {
                GenOp::Lit(v) => (text("LIT", &[v.to_absolute_exact()]), v),
                GenOp::Double(a) => (
                    text("DOUBLE", &[reg(a)]),
                    &SexRational::from(2) * &prev(a),
                ),
                GenOp::Halve(a) => (
                    text("HALVE", &[reg(a)]),
                    prev(a).checked_div(&SexRational::from(2)).unwrap(),
                ),
                GenOp::Square(a) => (text("SQUARE", &[reg(a)]), prev(a).square()),
                GenOp::Add(a, b) => (text("ADD", &[reg(a), reg(b)]), &prev(a) + &prev(b)),
                GenOp::Mul(a, b) => (text("MUL", &[reg(a), reg(b)]), &prev(a) * &prev(b)),
                GenOp::Sub(a, b) => (text("SUB", &[reg(a), reg(b)]), &prev(a) - &prev(b)),
            }
        };
        let verdict = match claim_kind {
            GenClaim::None => Verdict::Unclaimed,
            GenClaim::Correct => {
                line.push_str(&format!(" => {}", value.to_absolute_exact()));
                Verdict::Ok
            }
            GenClaim::Wrong => {
                let wrong = &value + &offset;
                line.push_str(&format!(" => {}", wrong.to_absolute_exact()));
                Verdict::Mismatch
            }
            GenClaim::WrongWithCorrection => {
                let wrong = &value + &offset;
                line.push_str(&format!(
                    " => {} ! error-for {}",
                    wrong.to_absolute_exact(),
                    value.to_absolute_exact()
                ));
                Verdict::AnnotatedError
            }
        };
        values.push(value);
        expected.push(verdict);
        steps.push(line);
    }
    let text = steps.join("\n") + "\n";
    (parse_script(&text).unwrap(), expected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scripts_round_trip_and_run_deterministically(
        ops in proptest::collection::vec((gen_op(), gen_claim()), 1..24),
    ) {
        let (script, expected) = build_script(ops);

        let rendered = script.to_string();
        let reparsed = parse_script(&rendered).unwrap();
        prop_assert_eq!(&reparsed, &script);

        let first = run(&script).unwrap();
        let second = run(&reparsed).unwrap();
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(first.to_json(), second.to_json());

        let verdicts: Vec<Verdict> = first.results.iter().map(|r| r.verdict).collect();
        prop_assert_eq!(verdicts, expected);
    }

    #[test]
    fn directives_survive_the_round_trip(
        keep_name in any::<bool>(),
        label in proptest::option::of("[a-z]{1,8}"),
    ) {
        let mut script = parse_script("alpha := LIT 2 => 2\n").unwrap();
        if keep_name {
            script.name = "demo".into();
        }
        script.provenance = Some("a test fixture".into());
        script.outputs = vec![OutputDecl { register: "alpha".into(), label }];
        let reparsed = parse_script(&script.to_string()).unwrap();
        prop_assert_eq!(reparsed, script);
    }
}

#[test]
fn volume_sar_is_one_square_nindan_times_one_kus() {
    let kus_in_nindan = Unit::Kus.ratio_to_base();
    assert_eq!(Unit::Sar.ratio_to_base(), kus_in_nindan);
    assert_eq!(Unit::Sar.ratio_to_base(), rat(1, 12));
    assert_eq!(Unit::Sar.dimension(), Dimension::Volume);
}

#[test]
fn step_display_keeps_citations() {
    let step = Step {
        target: "a".into(),
        opcode: sahar::tablet::Opcode::Lit,
        operands: vec![sahar::tablet::Operand::Literal {
            value: SexRational::from(3),
            unit: None,
        }],
        tablet_claim: None,
        corrected: None,
        source_line: Some("Obv. L1".into()),
    };
    let script = Script {
        name: String::new(),
        provenance: None,
        steps: vec![step],
        outputs: vec![],
    };
    let reparsed = parse_script(&script.to_string()).unwrap();
    assert_eq!(reparsed, script);
}
