//! Identity scanner: exhaustive counterexample search for the closed-form
//! identities the rest of the crate relies on. Each identity has a name,
//! a default range, and a runner that returns either a clean count or the
//! first violating tuple with full context.

use serde::{Deserialize, Serialize};

use crate::bn::bn_equals_full;
use crate::flips::n2_actual_wall_filter;
use crate::invariants::{brill_noether_number, c_counts, dual_type};
use crate::sweep::SweepRanges;
use crate::types::{CurveContext, SystemType};
use crate::walls::enumerate_walls;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub identity: String,
    pub checked: u64,
    /// First violating tuple, with enough context to reproduce it.
    pub violation: Option<String>,
}

pub struct IdentitySpec {
    pub name: &'static str,
    pub description: &'static str,
    pub default_ranges: SweepRanges,
    runner: fn(&SweepRanges) -> (u64, Option<String>),
}

pub fn identities() -> &'static [IdentitySpec] {
    &[
        IdentitySpec {
            name: "euler",
            description: "beta(n,d,k) = beta1 + beta2 + C12 + C21 - 1 over all component pairs",
            default_ranges: SweepRanges {
                genus: (0, 5),
                rank: (1, 4),
                degree: (-10, 10),
                sections: (0, 5),
            },
            runner: run_euler,
        },
        IdentitySpec {
            name: "duality",
            description: "beta(n,d,k) = beta(k-n,d,k) whenever k > n",
            default_ranges: SweepRanges {
                genus: (0, 5),
                rank: (1, 4),
                degree: (-20, 20),
                sections: (0, 5),
            },
            runner: run_duality,
        },
        IdentitySpec {
            name: "k1-wall-form",
            description: "every wall of (n,d,1) is s/m with 0 < m < n and 0 < s < d",
            default_ranges: SweepRanges {
                genus: (2, 2),
                rank: (2, 5),
                degree: (1, 20),
                sections: (1, 1),
            },
            runner: run_k1_wall_form,
        },
        IdentitySpec {
            name: "noflips",
            description: "for rank 2 and d <= g+2, no wall passes the actual-critical-value filter",
            default_ranges: SweepRanges {
                genus: (2, 6),
                rank: (2, 2),
                degree: (-2, 8),
                sections: (1, 6),
            },
            runner: run_noflips,
        },
        IdentitySpec {
            name: "beta-specialization",
            description: "closed forms for beta at k=1, (2,d,2), (2,d,3), k=3 and k=n agree with the general formula",
            default_ranges: SweepRanges {
                genus: (0, 6),
                rank: (1, 6),
                degree: (-20, 20),
                sections: (0, 6),
            },
            runner: run_beta_specialization,
        },
        IdentitySpec {
            name: "equals-full",
            description: "B(n,d,k) = M(n,d) iff beta >= n^2(g-1) + 1 (genus >= 2)",
            default_ranges: SweepRanges {
                genus: (2, 6),
                rank: (1, 5),
                degree: (-30, 30),
                sections: (0, 6),
            },
            runner: run_equals_full,
        },
    ]
}

pub fn find_identity(name: &str) -> Option<&'static IdentitySpec> {
    identities().iter().find(|i| i.name == name)
}

pub fn run_scan(name: &str, ranges: &SweepRanges) -> Option<ScanReport> {
    let spec = find_identity(name)?;
    let (checked, violation) = (spec.runner)(ranges);
    Some(ScanReport {
        identity: spec.name.to_string(),
        checked,
        violation,
    })
}

fn run_euler(r: &SweepRanges) -> (u64, Option<String>) {
    let mut checked = 0u64;
    for g in r.genus.0..=r.genus.1 {
        for n1 in r.rank.0.max(1)..=r.rank.1 {
            for n2 in r.rank.0.max(1)..=r.rank.1 {
                for d1 in r.degree.0..=r.degree.1 {
                    for d2 in r.degree.0..=r.degree.1 {
                        for k1 in r.sections.0..=r.sections.1 {
                            for k2 in r.sections.0..=r.sections.1 {
                                checked += 1;
                                let t1 = SystemType::new(n1, d1, k1);
                                let t2 = SystemType::new(n2, d2, k2);
                                let counts = c_counts(g, t1, t2);
                                if !counts.euler_identity_holds() {
                                    return (
                                        checked,
                                        Some(format!("g={g}, t1={t1}, t2={t2}: {counts:?}")),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    (checked, None)
}

fn run_duality(r: &SweepRanges) -> (u64, Option<String>) {
    let mut checked = 0u64;
    for g in r.genus.0..=r.genus.1 {
        for n in r.rank.0.max(1)..=r.rank.1 {
            for d in r.degree.0..=r.degree.1 {
                for k in r.sections.0..=r.sections.1 {
                    if k <= n {
                        continue;
                    }
                    checked += 1;
                    let t = SystemType::new(n, d, k);
                    let dual = dual_type(t).expect("k > n");
                    let (b, bd) = (brill_noether_number(g, t), brill_noether_number(g, dual));
                    if b != bd {
                        return (
                            checked,
                            Some(format!(
                                "g={g}, {t}: beta {b} but dual {dual} has beta {bd}"
                            )),
                        );
                    }
                }
            }
        }
    }
    (checked, None)
}

fn run_k1_wall_form(r: &SweepRanges) -> (u64, Option<String>) {
    let mut checked = 0u64;
    for n in r.rank.0.max(2)..=r.rank.1 {
        for d in r.degree.0.max(1)..=r.degree.1 {
            let t = SystemType::new(n, d, 1);
            for w in &enumerate_walls(t).walls {
                checked += 1;
                // w = s/m in lowest terms must already have m < n, s < d
                let ok = w.is_positive()
                    && w.denom() < &num_bigint::BigInt::from(n)
                    && w.numer() < &num_bigint::BigInt::from(d);
                if !ok {
                    return (
                        checked,
                        Some(format!("{t}: wall {w} is not s/m with m<n, s<d")),
                    );
                }
            }
        }
    }
    (checked, None)
}

fn run_noflips(r: &SweepRanges) -> (u64, Option<String>) {
    let mut checked = 0u64;
    for g in r.genus.0.max(2)..=r.genus.1 {
        let ctx = CurveContext::new(g, true);
        let d_hi = r.degree.1.min(i64::from(g) + 2);
        for d in r.degree.0..=d_hi {
            for k in r.sections.0.max(1)..=r.sections.1 {
                let t = SystemType::new(2, d, k);
                for w in &enumerate_walls(t).walls {
                    checked += 1;
                    if n2_actual_wall_filter(ctx, t, w).expect("rank 2") {
                        return (
                            checked,
                            Some(format!(
                                "g={g}, {t}: wall {w} passes the filter despite d <= g+2"
                            )),
                        );
                    }
                }
            }
        }
    }
    (checked, None)
}

fn run_beta_specialization(r: &SweepRanges) -> (u64, Option<String>) {
    let mut checked = 0u64;
    for g in r.genus.0..=r.genus.1 {
        let gi = i64::from(g);
        for n in r.rank.0.max(1)..=r.rank.1 {
            let ni = i64::from(n);
            for d in r.degree.0..=r.degree.1 {
                for k in r.sections.0..=r.sections.1 {
                    let t = SystemType::new(n, d, k);
                    let beta = brill_noether_number(g, t);
                    let mut expect: Vec<(&str, i64)> = Vec::new();
                    if k == 1 {
                        expect.push(("k=1", (ni * ni - ni) * (gi - 1) + d));
                    }
                    if n == 2 && k == 2 {
                        expect.push(("(2,d,2)", 2 * d - 3));
                    }
                    if n == 2 && k == 3 {
                        expect.push(("(2,d,3)", 3 * d - 2 * gi - 6));
                    }
                    if k == 3 {
                        expect.push(("k=3", (ni * ni - 3 * ni) * (gi - 1) + 3 * d - 8));
                    }
                    if k == n {
                        expect.push(("k=n", d * ni - ni * ni + 1));
                    }
                    for (label, e) in expect {
                        checked += 1;
                        if beta != e {
                            return (
                                checked,
                                Some(format!(
                                    "g={g}, {t}: beta = {beta} but the {label} closed form gives {e}"
                                )),
                            );
                        }
                    }
                }
            }
        }
    }
    (checked, None)
}

fn run_equals_full(r: &SweepRanges) -> (u64, Option<String>) {
    let mut checked = 0u64;
    for g in r.genus.0.max(2)..=r.genus.1 {
        let gi = i128::from(g);
        for n in r.rank.0.max(1)..=r.rank.1 {
            let ni = i128::from(n);
            for d in r.degree.0..=r.degree.1 {
                for k in r.sections.0..=r.sections.1 {
                    checked += 1;
                    let t = SystemType::new(n, d, k);
                    let lhs = bn_equals_full(g, t).expect("genus >= 2");
                    let threshold = ni * ni * (gi - 1) + 1;
                    let rhs = i128::from(brill_noether_number(g, t)) >= threshold;
                    if lhs != rhs {
                        return (
                            checked,
                            Some(format!(
                                "g={g}, {t}: equals-full is {lhs} but beta comparison gives {rhs}"
                            )),
                        );
                    }
                }
            }
        }
    }
    (checked, None)
}
