//! Exhaustive sweeps over every labelled graph of a given order.
//!
//! Graphs are indexed by edge masks over the pairs of `K_n`; the connected
//! ones are the instance set. Per-order tallies are combined with
//! associative reductions, so results do not depend on scheduling.

use rayon::prelude::*;
use wcds_core::oracle::MaskGraph;

use super::{FindingKind, ReportBuilder, VerificationReport};

fn pairs(order: usize) -> Vec<(usize, usize)> {
    (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect()
}

fn mask_graph(order: usize, pairs: &[(usize, usize)], edges: u64) -> MaskGraph {
    let mut adj = vec![0u64; order];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if edges >> k & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    MaskGraph::from_adjacency(adj).expect("order is between 1 and 63")
}

fn describe(order: usize, pairs: &[(usize, usize)], edges: u64) -> String {
    let list: Vec<String> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| edges >> k & 1 == 1)
        .map(|(_, &(u, v))| format!("{}-{}", u + 1, v + 1))
        .collect();
    format!("order {order}, edges [{}]", list.join(" "))
}

#[derive(Debug, Clone, Copy, Default)]
struct StructuralTally {
    graphs: u64,
    upward: u64,
    domination: u64,
    // smallest (edge mask, subset) with a violation
    first_upward: Option<(u64, u64)>,
    first_domination: Option<(u64, u64)>,
}

fn min_opt(a: Option<(u64, u64)>, b: Option<(u64, u64)>) -> Option<(u64, u64)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl StructuralTally {
    fn merge(self, o: Self) -> Self {
        StructuralTally {
            graphs: self.graphs + o.graphs,
            upward: self.upward + o.upward,
            domination: self.domination + o.domination,
            first_upward: min_opt(self.first_upward, o.first_upward),
            first_domination: min_opt(self.first_domination, o.first_domination),
        }
    }
}

fn structural_one(order: usize, pairs: &[(usize, usize)], edges: u64) -> StructuralTally {
    let g = mask_graph(order, pairs, edges);
    let full = g.full();
    if !g.is_wcds(full) {
        return StructuralTally::default();
    }
    let wcds: Vec<bool> = (0..=full).map(|s| g.is_wcds(s)).collect();
    let mut t = StructuralTally {
        graphs: 1,
        ..Default::default()
    };
    for s in 1..=full {
        if !wcds[s as usize] {
            continue;
        }
        if order >= 2 && !g.is_dominating(s) {
            t.domination += 1;
            t.first_domination = min_opt(t.first_domination, Some((edges, s)));
        }
        for v in 0..order {
            if !wcds[(s | 1 << v) as usize] {
                t.upward += 1;
                t.first_upward = min_opt(t.first_upward, Some((edges, s)));
            }
        }
    }
    t
}

/// Upward closure and "w.c.d.s. implies dominating" over every connected
/// labelled graph of order `1..=max_order`.
pub fn structural_report(max_order: usize) -> VerificationReport {
    let mut b = ReportBuilder::new("structural");
    for order in 1..=max_order {
        let pairs = pairs(order);
        let t = (0..1u64 << pairs.len())
            .into_par_iter()
            .map(|e| structural_one(order, &pairs, e))
            .reduce(StructuralTally::default, StructuralTally::merge);
        let subject = format!("order {order}");
        b.check(&subject, "violations", "upward closure", 0, t.upward);
        b.note(format!("{} connected graphs", t.graphs));
        b.check(
            &subject,
            "violations",
            "w.c.d.s. implies dominating",
            0,
            t.domination,
        );
        b.note(format!("{} connected graphs", t.graphs));
        for (what, first) in [
            ("upward closure", t.first_upward),
            ("domination", t.first_domination),
        ] {
            if let Some((edges, s)) = first {
                b.finding(
                    &subject,
                    FindingKind::Counterexample,
                    format!(
                        "{what} fails for {} at set {}",
                        describe(order, &pairs, edges),
                        wcds_core::VertexSet::from_mask(s)
                    ),
                );
            }
        }
    }
    b.finish()
}

#[derive(Debug, Clone, Copy, Default)]
struct DeletionTally {
    checked: u64,
    skipped: u64,
    violations: u64,
    first: Option<(u64, u64)>,
}

impl DeletionTally {
    fn merge(self, o: Self) -> Self {
        DeletionTally {
            checked: self.checked + o.checked,
            skipped: self.skipped + o.skipped,
            violations: self.violations + o.violations,
            first: min_opt(self.first, o.first),
        }
    }
}

/// `γ_w(G - e) - 1 <= γ_w(G) <= γ_w(G - e)` for every connected labelled graph
/// of order `1..=max_order` and every edge whose removal keeps it connected.
/// Disconnecting deletions are counted as skipped.
pub fn edge_deletion_report(max_order: usize) -> VerificationReport {
    let mut b = ReportBuilder::new("edge_deletion_bounds");
    for order in 1..=max_order {
        let pairs = pairs(order);
        // 0 marks a disconnected graph
        let gw: Vec<u8> = (0..1u64 << pairs.len())
            .into_par_iter()
            .map(|e| mask_graph(order, &pairs, e).gamma_w().unwrap_or(0) as u8)
            .collect();
        let t = (0..1u64 << pairs.len())
            .into_par_iter()
            .filter(|&e| gw[e as usize] > 0)
            .map(|e| {
                let mut t = DeletionTally::default();
                let whole = gw[e as usize];
                let mut rest = e;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    let minus = gw[(e ^ bit) as usize];
                    if minus == 0 {
                        t.skipped += 1;
                        continue;
                    }
                    t.checked += 1;
                    if !(minus - 1 <= whole && whole <= minus) {
                        t.violations += 1;
                        t.first = min_opt(t.first, Some((e, bit)));
                    }
                }
                t
            })
            .reduce(DeletionTally::default, DeletionTally::merge);
        let subject = format!("order {order}");
        b.check(
            &subject,
            "violations",
            "edge-deletion bounds",
            0,
            t.violations,
        );
        b.note(format!("{} deletions checked", t.checked));
        b.skip(t.skipped as usize);
        if let Some((e, bit)) = t.first {
            let (u, v) = pairs[bit.trailing_zeros() as usize];
            b.finding(
                &subject,
                FindingKind::Counterexample,
                format!(
                    "bounds fail for {} minus {}-{}",
                    describe(order, &pairs, e),
                    u + 1,
                    v + 1
                ),
            );
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_are_clean() {
        let r = structural_report(5);
        assert!(r.passed());
        assert_eq!(r.summary.total, 10);
        // labelled connected graphs on 1..=5 vertices: 1, 1, 4, 38, 728
        let graphs: Vec<&str> = r
            .records
            .iter()
            .step_by(2)
            .map(|x| x.note.as_deref().unwrap())
            .collect();
        assert_eq!(
            graphs,
            [
                "1 connected graphs",
                "1 connected graphs",
                "4 connected graphs",
                "38 connected graphs",
                "728 connected graphs"
            ]
        );
        let r = edge_deletion_report(5);
        assert!(r.passed());
        // P_2 and every tree edge are bridges
        assert!(r.summary.skipped > 0);
    }
}
