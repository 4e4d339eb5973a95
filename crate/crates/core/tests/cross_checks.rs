//! Consistency checks that cut across modules: the wall enumeration
//! against slope balance, chamber verdicts against the terminal
//! classification, and dimension claims against the Brill-Noether number.

use cohsys::{
    brill_noether_number, classify_all_chambers, classify_terminal, critical_alpha,
    enumerate_decompositions, enumerate_walls, AlphaCap, CurveContext, Rational, Side, SystemType,
    TriState,
};

fn t(n: u32, d: i64, k: u32) -> SystemType {
    SystemType::new(n, d, k)
}

#[test]
fn every_balancing_alpha_is_an_enumerated_wall() {
    for n in 2..=4u32 {
        for d in -12..=12i64 {
            for k in 0..=5u32 {
                let total = t(n, d, k);
                let ws = enumerate_walls(total);
                let in_range = |alpha: &Rational| match &ws.cap {
                    AlphaCap::NoWalls => false,
                    AlphaCap::Bounded(c) => alpha < c,
                    // enumeration extends to the full stabilization bound
                    AlphaCap::Stabilized(_) => {
                        let hi = Rational::from_int(
                            (d * (i64::from(n) - 1)).max(d * (i64::from(k) - i64::from(n) - 1)),
                        );
                        *alpha <= hi
                    }
                };
                for n1 in 1..n {
                    for k1 in 0..=k {
                        for d1 in -40..=40i64 {
                            let t1 = t(n1, d1, k1);
                            let t2 = t(n - n1, d - d1, k - k1);
                            if let Some(alpha) = critical_alpha(t1, t2) {
                                if in_range(&alpha) {
                                    assert!(
                                        ws.walls.contains(&alpha),
                                        "{total}: balancing alpha {alpha} of {t1}+{t2} missing"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn walls_balance_some_decomposition() {
    for n in 2..=4u32 {
        for d in 1..=12i64 {
            for k in 0..=5u32 {
                let total = t(n, d, k);
                for w in &enumerate_walls(total).walls {
                    assert!(
                        !enumerate_decompositions(total, w).is_empty(),
                        "{total}: wall {w} balances nothing"
                    );
                }
            }
        }
    }
}

#[test]
fn terminal_dimension_is_beta_for_few_sections() {
    for g in 2..=5u32 {
        let ctx = CurveContext::new(g, true);
        for n in 2..=5u32 {
            for k in 1..n {
                for d in 1..=20i64 {
                    let v = classify_terminal(ctx, t(n, d, k));
                    if v.nonempty.is_yes() {
                        assert_eq!(v.dimension, Some(brill_noether_number(g, t(n, d, k))));
                    }
                }
            }
        }
    }
}

#[test]
fn terminal_dimension_for_equal_sections() {
    for g in 0..=5u32 {
        let ctx = CurveContext::new(g, false);
        for n in 2..=5u32 {
            let ni = i64::from(n);
            for d in (ni + 1)..=(ni + 12) {
                let v = classify_terminal(ctx, t(n, d, n));
                assert_eq!(v.nonempty, TriState::Yes);
                assert_eq!(v.dimension, Some(d * ni - ni * ni + 1));
                assert_eq!(v.dimension, Some(brill_noether_number(g, t(n, d, n))));
            }
        }
    }
}

#[test]
fn dual_span_beta_forms_agree() {
    for g in 0..=6u32 {
        let gi = i64::from(g);
        for n in 1..=5u32 {
            let ni = i64::from(n);
            for d in -10..=20i64 {
                let ty = t(n, d, n + 1);
                let closed_form = gi - (ni + 1) * (ni - d + gi);
                assert_eq!(brill_noether_number(g, ty), closed_form);
                assert_eq!(brill_noether_number(g, t(1, d, n + 1)), closed_form);
            }
        }
    }
}

#[test]
fn chambers_agree_with_terminal_on_last_chamber() {
    for g in 0..=4u32 {
        for petri in [false, true] {
            let ctx = CurveContext::new(g, petri);
            for n in 1..=4u32 {
                for d in -4..=12i64 {
                    for k in 0..=5u32 {
                        let chambers = classify_all_chambers(ctx, t(n, d, k));
                        if let Some((_, last)) = chambers.last() {
                            let terminal = classify_terminal(ctx, t(n, d, k));
                            assert_eq!(last.nonempty, terminal.nonempty);
                            assert_eq!(last.dimension, terminal.dimension);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn rank2_three_sections_condition_from_both_statements() {
    // the rank-2 and the three-section classifications overlap at
    // (2,d,3); both give non-emptiness exactly when 3d >= 2g+6
    for g in 2..=6u32 {
        let ctx = CurveContext::new(g, true);
        for d in -2..=20i64 {
            let holds = 3 * d >= 2 * i64::from(g) + 6;
            let beta_nonneg = brill_noether_number(g, t(2, d, 3)) >= 0;
            assert_eq!(holds, beta_nonneg);
            for (_, v) in classify_all_chambers(ctx, t(2, d, 3)) {
                assert_eq!(v.nonempty, TriState::from_bool(holds), "g={g}, d={d}");
            }
        }
    }
}

#[test]
fn locus_and_moduli_nonemptiness_agree_for_low_sections() {
    // for k = 2, 3 on a Petri curve the non-emptiness conditions of the
    // Brill-Noether locus and of the moduli spaces are the same
    use cohsys::bn_nonempty;
    for g in 2..=5u32 {
        let ctx = CurveContext::new(g, true);
        for n in 2..=6u32 {
            for d in -5..=25i64 {
                for k in 2..=3u32 {
                    let ty = t(n, d, k);
                    let chambers = classify_all_chambers(ctx, ty);
                    match chambers.first() {
                        Some((_, g0)) => {
                            assert_eq!(bn_nonempty(ctx, ty), g0.nonempty, "g={g} {ty}")
                        }
                        // no admissible alpha at all: the locus is empty too
                        None => assert!(bn_nonempty(ctx, ty).is_no(), "g={g} {ty}"),
                    }
                }
            }
        }
    }
}

#[test]
fn single_section_plus_patterns_have_positive_c12() {
    // for k = 1 the plus side is always k1 = 0 and
    // C12 = n1 n2 (g-1) + n1 alpha > 0 at genus >= 2
    for g in 2..=4u32 {
        for n in 2..=5u32 {
            for d in 1..=20i64 {
                let total = t(n, d, 1);
                for w in &enumerate_walls(total).walls {
                    for dec in enumerate_decompositions(total, w) {
                        if dec.side != Side::Plus {
                            continue;
                        }
                        assert_eq!(dec.t1.k, 0);
                        let counts = dec.counts(g);
                        let expect = Rational::from_int(
                            i64::from(dec.t1.n) * i64::from(dec.t2.n) * (i64::from(g) - 1),
                        ) + &Rational::from_int(i64::from(dec.t1.n)) * w;
                        assert_eq!(Rational::from_int(counts.c12), expect);
                        assert!(counts.c12 > 0);
                    }
                }
            }
        }
    }
}
