//! Acceptance criteria. Each test prints one `[PASS]` / `[FAIL]` line and
//! asserts on it. Run with `cargo test --test acceptance -- --nocapture` to
//! see the lines.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use knotquandle::alexander::{alexander_quandle, quotient_quandle};
use knotquandle::cli;
use knotquandle::group::{
    automorphism_from_permutation, automorphism_order, cyclic_group, enumerate_automorphisms_of_order,
    fixed_subgroup, quaternion_group, special_linear_group, FiniteGroup, GroupAutomorphism, Subgroup,
};
use knotquandle::iso::{are_isomorphic, brute_force_isomorphic, is_isomorphism, IsoCertificate};
use knotquandle::knots::{
    equivalence_classes, find_tuple, twist_spun_trefoil_quandle, twist_spun_two_bridge_quandle,
    two_bridge_equivalent, InequivalentTuple,
};
use knotquandle::quandle::{dihedral_quandle, orbits, trivial_quandle, Quandle};
use knotquandle::text::parse_quandle_file;

/// Seed for every randomized criterion.
const SEED: u64 = 0x7715_7ED5;

fn report(id: u32, what: &str, failures: &[String], elapsed: Duration, budget: Option<Duration>) {
    let over = budget.filter(|b| elapsed >= *b);
    let ok = failures.is_empty() && over.is_none();
    println!(
        "[{}] criterion {id}: {what} ({elapsed:.2?}{})",
        if ok { "PASS" } else { "FAIL" },
        budget.map(|b| format!(" / budget {b:?}")).unwrap_or_default()
    );
    for f in failures {
        println!("    - {f}");
    }
    if let Some(b) = over {
        println!("    - exceeded time budget {b:?}");
    }
    assert!(ok, "criterion {id} failed: {failures:?}");
}

fn cli_stdout(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("knotquandle").chain(args.iter().copied());
    let code = cli::run(argv, &mut std::io::empty(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn criterion_1_trefoil_cardinalities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (m, expected) in [(1, 1), (2, 3), (3, 8), (4, 24), (5, 120)] {
        let (code, text) = cli_stdout(&["trefoil", &m.to_string()]);
        if code != 0 {
            failures.push(format!("trefoil {m} exited {code}"));
            continue;
        }
        let order = parse_quandle_file(&text).map(|q| q.order());
        if order != Ok(expected) {
            failures.push(format!("trefoil {m}: order {order:?}, expected {expected}"));
        }
    }
    report(1, "trefoil m=1..5 has order 1, 3, 8, 24, 120", &failures, start.elapsed(), Some(Duration::from_secs(1)));
}

#[test]
fn criterion_2_trefoil_two_is_dihedral_three() {
    let start = Instant::now();
    let a = twist_spun_trefoil_quandle(2).unwrap();
    let b = dihedral_quandle(3).unwrap();
    let mut failures = Vec::new();
    match are_isomorphic(&a, &b) {
        IsoCertificate::Isomorphic(f) if is_isomorphism(&a, &b, &f) => {}
        other => failures.push(format!("got {other}")),
    }
    report(2, "trefoil 2 is isomorphic to dihedral 3", &failures, start.elapsed(), Some(Duration::from_secs(1)));
}

#[test]
fn criterion_3_two_bridge_is_dihedral() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in [3u64, 5, 7, 9, 11] {
        let dihedral = dihedral_quandle(p as usize).unwrap();
        for q in 1..p as i64 {
            if num_integer::gcd(p, q as u64) != 1 {
                continue;
            }
            checked += 1;
            let t = twist_spun_two_bridge_quandle(p, q).unwrap();
            if t.table() != dihedral.table() {
                failures.push(format!("({p}, {q}) differs from dihedral {p}"));
            }
        }
    }
    let what = format!("2-twist-spun 2-bridge (p, q) table-identical to dihedral p, {checked} pairs");
    report(3, &what, &failures, start.elapsed(), Some(Duration::from_secs(1)));
}

#[test]
fn criterion_4_inequivalent_tuples() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (p, expected) in [(7u64, 2usize), (11, 3)] {
        let n = equivalence_classes(p).unwrap().len();
        if n != expected {
            failures.push(format!("equivalence_classes({p}) has {n} classes, expected {expected}"));
        }
    }
    let expected_tuples = [
        (2, InequivalentTuple { p: 7, qs: vec![1, 2] }),
        (3, InequivalentTuple { p: 11, qs: vec![1, 2, 3] }),
    ];
    for (l, expected) in expected_tuples {
        match find_tuple(l, 100) {
            Ok(t) => {
                if t != expected {
                    failures.push(format!("find_tuple({l}, 100) = {t:?}, expected {expected:?}"));
                }
                check_tuple(&t, &mut failures);
            }
            Err(e) => failures.push(format!("find_tuple({l}, 100): {e}")),
        }
    }
    report(4, "2 and 3 classes for p = 7, 11; tuples for l = 2, 3", &failures, start.elapsed(), Some(Duration::from_secs(1)));
}

/// Pairwise inequivalent knots, identical quandle tables.
fn check_tuple(t: &InequivalentTuple, failures: &mut Vec<String>) {
    let tables: Vec<Quandle> =
        t.qs.iter().map(|&q| twist_spun_two_bridge_quandle(t.p, q as i64).unwrap()).collect();
    for i in 0..t.qs.len() {
        for j in i + 1..t.qs.len() {
            if two_bridge_equivalent(t.p, t.qs[i] as i64, t.qs[j] as i64).unwrap() {
                failures.push(format!("p={}: {} and {} are equivalent", t.p, t.qs[i], t.qs[j]));
            }
            if tables[i].table() != tables[j].table() {
                failures.push(format!("p={}: tables for {} and {} differ", t.p, t.qs[i], t.qs[j]));
            }
        }
    }
}

fn check_axioms(q: &Quandle, label: &str, failures: &mut Vec<String>, count: &mut usize) {
    *count += 1;
    if let Err(v) = q.validate() {
        failures.push(format!("{label}: {v}"));
    }
}

#[test]
fn criterion_5_axiom_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for p in 1..=31 {
        check_axioms(&trivial_quandle(p).unwrap(), &format!("trivial {p}"), &mut failures, &mut count);
        if p >= 2 {
            check_axioms(&dihedral_quandle(p).unwrap(), &format!("dihedral {p}"), &mut failures, &mut count);
        }
        let g = cyclic_group(p).unwrap();
        for aut in enumerate_automorphisms_of_order(&g, 30, false).unwrap() {
            let q = alexander_quandle(&g, &aut).unwrap();
            check_axioms(&q, &format!("alexander Z/{p} {:?}", aut.perm()), &mut failures, &mut count);
        }
    }
    for (group, m) in [(quaternion_group(), 3), (special_linear_group(3).unwrap(), 4), (special_linear_group(5).unwrap(), 5)] {
        let auts = enumerate_automorphisms_of_order(&group, m, true).unwrap();
        if auts.is_empty() {
            failures.push(format!("{}: no automorphism of order {m}", group.name()));
        }
        for aut in &auts {
            let q = alexander_quandle(&group, aut).unwrap();
            check_axioms(&q, &format!("alexander {}", group.name()), &mut failures, &mut count);
            let h = fixed_subgroup(aut);
            let quotient = quotient_quandle(&group, aut, &h).unwrap();
            check_axioms(&quotient, &format!("quotient {} by fixed subgroup", group.name()), &mut failures, &mut count);
        }
    }
    for m in 1..=5 {
        check_axioms(&twist_spun_trefoil_quandle(m).unwrap(), &format!("trefoil {m}"), &mut failures, &mut count);
    }
    let z6 = cyclic_group(6).unwrap();
    let inv = GroupAutomorphism::inversion(&z6).unwrap();
    for elements in [&[0usize][..], &[0, 3]] {
        let q = quotient_quandle(&z6, &inv, &Subgroup::new(&z6, elements).unwrap()).unwrap();
        check_axioms(&q, &format!("quotient Z/6 by {elements:?}"), &mut failures, &mut count);
    }
    let id = GroupAutomorphism::identity(&z6);
    check_axioms(&quotient_quandle(&z6, &id, &Subgroup::whole(&z6)).unwrap(), "Z/6 by Z/6", &mut failures, &mut count);

    let what = format!("Q1/Q2/Q3 hold exhaustively for {count} constructed quandles");
    report(5, &what, &failures, start.elapsed(), Some(Duration::from_secs(30)));
}

fn group_pool() -> Vec<FiniteGroup> {
    let mut groups: Vec<FiniteGroup> = (2..=12).map(|p| cyclic_group(p).unwrap()).collect();
    groups.push(quaternion_group());
    groups.push(special_linear_group(3).unwrap());
    groups.push(special_linear_group(5).unwrap());
    groups
}

#[test]
fn criterion_6_quotient_model() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let z6 = cyclic_group(6).unwrap();
    let inv = GroupAutomorphism::inversion(&z6).unwrap();
    let q = quotient_quandle(&z6, &inv, &Subgroup::new(&z6, &[0, 3]).unwrap()).unwrap();
    if !are_isomorphic(&q, &dihedral_quandle(3).unwrap()).is_isomorphic() {
        failures.push("quotient of (Z/6, inversion) by {0,3} is not dihedral 3".into());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let groups = group_pool();
    for _ in 0..10 {
        let g = &groups[rng.gen_range(0..groups.len())];
        let auts = enumerate_automorphisms_of_order(g, 120, false).unwrap();
        let aut = auts.choose(&mut rng).unwrap();
        let alexander = alexander_quandle(g, aut).unwrap();
        let quotient = quotient_quandle(g, aut, &Subgroup::trivial(g)).unwrap();
        let identity: Vec<usize> = (0..g.order()).collect();
        if !is_isomorphism(&quotient, &alexander, &identity) {
            failures.push(format!("{} {:?}: Hx -> x is not an isomorphism", g.name(), aut.perm()));
        }
        if !are_isomorphic(&quotient, &alexander).is_isomorphic() {
            failures.push(format!("{} {:?}: iso engine disagrees", g.name(), aut.perm()));
        }
    }
    report(6, "quotient by {0,3} is dihedral 3; trivial quotients match, 10 seeded cases", &failures, start.elapsed(), None);
}

fn small_constructed_quandles() -> Vec<Quandle> {
    let mut pool = Vec::new();
    for p in 1..=8 {
        pool.push(trivial_quandle(p).unwrap());
        if p >= 2 {
            pool.push(dihedral_quandle(p).unwrap());
        }
        let g = cyclic_group(p).unwrap();
        for aut in enumerate_automorphisms_of_order(&g, 12, false).unwrap() {
            pool.push(alexander_quandle(&g, &aut).unwrap());
        }
    }
    let q8 = quaternion_group();
    for aut in enumerate_automorphisms_of_order(&q8, 12, false).unwrap() {
        pool.push(alexander_quandle(&q8, &aut).unwrap());
    }
    for m in 1..=3 {
        pool.push(twist_spun_trefoil_quandle(m).unwrap());
    }
    for (p, q) in [(3, 1), (5, 1), (5, 2), (7, 1), (7, 2), (7, 3)] {
        pool.push(twist_spun_two_bridge_quandle(p, q).unwrap());
    }
    let z6 = cyclic_group(6).unwrap();
    let inv = GroupAutomorphism::inversion(&z6).unwrap();
    pool.push(quotient_quandle(&z6, &inv, &Subgroup::new(&z6, &[0, 3]).unwrap()).unwrap());
    pool.push(quotient_quandle(&z6, &inv, &Subgroup::trivial(&z6)).unwrap());
    pool
}

#[test]
fn criterion_7_iso_engine_matches_oracle() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let pool = small_constructed_quandles();
    let mut pairs = 0;
    let mut isomorphic_pairs = 0;
    for a in &pool {
        for b in &pool {
            pairs += 1;
            let fast = are_isomorphic(a, b).is_isomorphic();
            let slow = brute_force_isomorphic(a, b).unwrap();
            isomorphic_pairs += usize::from(slow);
            if fast != slow {
                failures.push(format!("{} vs {}: engine {fast}, oracle {slow}", a.name(), b.name()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100 {
        let a = pool.choose(&mut rng).unwrap();
        let mut sigma: Vec<usize> = (0..a.order()).collect();
        sigma.shuffle(&mut rng);
        let relabeled = a.relabel(&sigma);
        // compare against a random same-order quandle too, to exercise both answers
        let same_order: Vec<&Quandle> = pool.iter().filter(|q| q.order() == a.order()).collect();
        let other = same_order.choose(&mut rng).unwrap().relabel(&sigma);
        for b in [&relabeled, &other] {
            pairs += 1;
            let fast = are_isomorphic(a, b).is_isomorphic();
            let slow = brute_force_isomorphic(a, b).unwrap();
            if fast != slow {
                failures.push(format!("relabeled {} vs {}: engine {fast}, oracle {slow}", a.name(), b.name()));
            }
        }
    }
    let what = format!(
        "engine agrees with brute force on {pairs} pairs ({} quandles, {isomorphic_pairs} isomorphic pool pairs)",
        pool.len()
    );
    report(7, &what, &failures, start.elapsed(), None);
}

#[test]
fn criterion_8_connectivity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for p in 2..=31 {
        let n = orbits(&dihedral_quandle(p).unwrap()).len();
        if (n == 1) != (p % 2 == 1) {
            failures.push(format!("dihedral {p} has {n} orbits"));
        }
        let n = orbits(&trivial_quandle(p).unwrap()).len();
        if n != p {
            failures.push(format!("trivial {p} has {n} orbits"));
        }
    }
    for m in 2..=5 {
        let n = orbits(&twist_spun_trefoil_quandle(m).unwrap()).len();
        if n != 1 {
            failures.push(format!("trefoil {m} has {n} orbits"));
        }
    }
    report(8, "dihedral connected iff p odd, trefoil m=2..5 connected, trivial p has p orbits", &failures, start.elapsed(), None);
}

#[test]
fn criterion_9_group_layer() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (q, expected) in [(3u32, 24usize), (5, 120)] {
        let g = special_linear_group(q).unwrap();
        if g.order() != expected {
            failures.push(format!("|SL(2,{q})| = {}, expected {expected}", g.order()));
        }
    }
    let mut groups: Vec<FiniteGroup> = (1..=31).map(|p| cyclic_group(p).unwrap()).collect();
    groups.push(quaternion_group());
    groups.push(special_linear_group(3).unwrap());
    groups.push(special_linear_group(5).unwrap());
    for g in &groups {
        if let Err(e) = g.verify_axioms() {
            failures.push(format!("{}: {e}", g.name()));
        }
    }
    let q8 = quaternion_group();
    match automorphism_from_permutation(&q8, vec![0, 1, 4, 5, 6, 7, 2, 3]) {
        Ok(aut) if automorphism_order(&aut) == 3 => {}
        Ok(aut) => failures.push(format!("i->j->k cycle has order {}", automorphism_order(&aut))),
        Err(e) => failures.push(format!("i->j->k cycle rejected: {e}")),
    }
    report(9, "SL(2,3), SL(2,5) orders; associativity of all groups; Q8 order-3 automorphism", &failures, start.elapsed(), Some(Duration::from_secs(10)));
}
