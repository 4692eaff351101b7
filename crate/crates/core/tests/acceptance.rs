//! Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use yhk::ayh::{check_relations, check_theta, check_xggx, is_central, mult, orbit_sum, random_laurent, PbwElement, PbwMonomial};
use yhk::crystal::{branch_graph_compare, module_graph, predicted_level_size, tensor_crystal};
use yhk::cyclo::{regular_representation, WeightDatum};
use yhk::partition::Partition;
use yhk::rep::{morita_check, predicted_branch_dims, restrict_branch, simple_labels, simple_module, FdModule, Invariants};
use yhk::report::RelationReport;
use yhk::scalars::Specialization;
use yhk::symgroup::{Composition, Perm};

const SEED: u64 = 20_240_611;

type Outcome = Result<String, String>;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn simple(mu: &Composition, shapes: &[Partition], charge: i64) -> FdModule {
    simple_module(mu, shapes, &WeightDatum::from_charges(&[charge]), Specialization::Generic).expect("simple module")
}

fn full_report(r: usize, n: usize) -> Result<RelationReport, String> {
    let mut rep = check_relations(r, n, SEED);
    rep.merge(check_theta(r, n));
    for mu in Composition::all(r, n) {
        for k in (0..r).filter(|&k| mu.partial_sum(k) < n) {
            rep.merge(check_xggx(r, n, &mu, k).map_err(|e| e.to_string())?);
        }
    }
    Ok(rep)
}

fn failures(rep: &RelationReport) -> String {
    rep.families.iter().filter(|f| !f.passed()).map(|f| format!("{}: {:?}", f.name, f.failures)).collect::<Vec<_>>().join("; ")
}

fn relation_suite() -> Outcome {
    let mut families = BTreeSet::new();
    let mut instances = 0;
    for r in 1..=3 {
        for n in 2..=4 {
            let rep = full_report(r, n)?;
            if !rep.all_passed() {
                return Err(format!("(r,n)=({r},{n}) {}", failures(&rep)));
            }
            instances += rep.families.iter().map(|f| f.instances).sum::<usize>();
            families.extend(rep.families.iter().map(|f| f.name.clone()));
        }
    }
    Ok(format!("{} families, {instances} identities over 9 ranks", families.len()))
}

fn random_monomial(rng: &mut ChaCha8Rng, r: usize, n: usize, perms: &[Perm]) -> PbwElement {
    let alpha = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
    let beta = (0..n).map(|_| rng.gen_range(0..r) as u8).collect();
    let w = perms.choose(rng).unwrap().clone();
    PbwElement::monomial(r, PbwMonomial::new(alpha, beta, w), yhk::scalars::Scalar::one())
}

fn pbw_well_defined() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut triples = 0;
    for r in 2..=3 {
        for n in 2..=3 {
            let perms = Perm::all(n);
            for _ in 0..100 {
                let a = random_monomial(&mut rng, r, n, &perms);
                let b = random_monomial(&mut rng, r, n, &perms);
                let c = random_monomial(&mut rng, r, n, &perms);
                if mult(&mult(&a, &b), &c) != mult(&a, &mult(&b, &c)) {
                    return Err(format!("(r,n)=({r},{n}) a={a} b={b} c={c}"));
                }
                triples += 1;
            }
        }
    }
    let mut words = 0;
    for n in 1..=4 {
        for w in Perm::all(n) {
            let target = PbwElement::g_w(2, &w);
            for word in w.all_reduced_words() {
                let product = word.iter().fold(PbwElement::one(2, n), |acc, &i| mult(&acc, &PbwElement::g(2, n, i)));
                if product != target {
                    return Err(format!("reduced word {word:?} of {w}"));
                }
                words += 1;
            }
        }
    }
    Ok(format!("{triples} associative triples, {words} reduced words"))
}

fn intertwiners() -> Outcome {
    let mut count = 0;
    for r in 2..=3 {
        for n in 2..=3 {
            let rep = check_theta(r, n);
            if !rep.all_passed() {
                return Err(format!("(r,n)=({r},{n}) {}", failures(&rep)));
            }
            count += rep.families.iter().map(|f| f.instances).sum::<usize>();
        }
    }
    Ok(format!("{count} identities"))
}

fn center() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut central, mut noncentral) = (0, 0);
    for r in 2..=3 {
        for n in 2..=3 {
            let mut seen = BTreeSet::new();
            let alphas = (0..n).map(|_| -2..=2i32).fold(vec![vec![]], |acc, range| {
                acc.iter().flat_map(|p: &Vec<i32>| range.clone().map(move |a| [p.clone(), vec![a]].concat())).collect()
            });
            let betas = (0..n).map(|_| 0..r as i64).fold(vec![vec![]], |acc, range| {
                acc.iter().flat_map(|p: &Vec<i64>| range.clone().map(move |b| [p.clone(), vec![b]].concat())).collect()
            });
            for alpha in &alphas {
                for beta in &betas {
                    let mut pairs: Vec<(i32, i64)> = alpha.iter().copied().zip(beta.iter().copied()).collect();
                    pairs.sort();
                    if !seen.insert(pairs) {
                        continue;
                    }
                    let z = orbit_sum(r, alpha, beta);
                    if !is_central(&z) {
                        return Err(format!("orbit sum of α={alpha:?} β={beta:?} is not central"));
                    }
                    central += 1;
                }
            }
            let mut made = 0;
            while made < 10 {
                let f = random_laurent(&mut rng, r, n, 3, 2);
                let w = Perm::simple(n, 1).unwrap();
                if f.permute_torus(&w) == f {
                    continue;
                }
                let g = f.add(&PbwElement::t(r, n, 1));
                if is_central(&g) {
                    return Err(format!("non-invariant {g} tests central"));
                }
                made += 1;
                noncentral += 1;
            }
        }
    }
    Ok(format!("{central} orbit sums central, {noncentral} non-invariant elements not central"))
}

fn cyclotomic_basis() -> Outcome {
    let mut dims = Vec::new();
    for (r, n, d) in [(2usize, 2usize, 1usize), (2, 2, 2), (3, 2, 1), (2, 3, 1)] {
        let charges: Vec<i64> = (0..d as i64).collect();
        let lambda = WeightDatum::from_charges(&charges);
        let m = regular_representation(&lambda, r, n, 10_000).map_err(|e| format!("(r,n,d)=({r},{n},{d}): {e}"))?;
        let expected = d.pow(n as u32) * r.pow(n as u32) * factorial(n);
        if m.dim() != expected {
            return Err(format!("(r,n,d)=({r},{n},{d}) dim {} expected {expected}", m.dim()));
        }
        let rep = m.check_relations();
        if !rep.all_passed() {
            return Err(format!("(r,n,d)=({r},{n},{d}) {}", failures(&rep)));
        }
        dims.push(m.dim());
    }
    Ok(format!("dimensions {dims:?}"))
}

/// Every simple module for `λ = {0:1}`, `r ≤ 3`, `n ≤ 4`.
fn criterion6_modules() -> Vec<(usize, usize, Composition, Vec<Partition>, FdModule)> {
    let mut out = Vec::new();
    for r in 1..=3 {
        for n in 1..=4 {
            for (mu, shapes) in simple_labels(r, n) {
                let m = simple(&mu, &shapes, 0);
                out.push((r, n, mu, shapes, m));
            }
        }
    }
    out
}

fn classification(modules: &[(usize, usize, Composition, Vec<Partition>, FdModule)]) -> Outcome {
    for r in 1..=3 {
        for n in 1..=4 {
            let here: Vec<&FdModule> = modules.iter().filter(|m| m.0 == r && m.1 == n).map(|m| &m.4).collect();
            let total: usize = here.iter().map(|m| m.dim() * m.dim()).sum();
            let expected = r.pow(n as u32) * factorial(n);
            if total != expected {
                return Err(format!("(r,n)=({r},{n}) Σ dim² = {total}, expected {expected}"));
            }
            let mut invariants = Vec::new();
            for m in &here {
                let rep = m.check_relations();
                if !rep.all_passed() {
                    return Err(format!("(r,n)=({r},{n}) {}", failures(&rep)));
                }
                let inv = Invariants::of(m).map_err(|e| e.to_string())?;
                if invariants.contains(&inv) {
                    return Err(format!("(r,n)=({r},{n}) two simple modules share invariants"));
                }
                invariants.push(inv);
            }
        }
    }
    Ok(format!("{} simple modules", modules.len()))
}

fn morita(modules: &[(usize, usize, Composition, Vec<Partition>, FdModule)]) -> Outcome {
    let lambda = WeightDatum::from_charges(&[0]);
    for (r, n, mu, shapes, m) in modules {
        let c = morita_check(m, &lambda).map_err(|e| e.to_string())?;
        if !c.passed() || !c.cyclotomic_y {
            return Err(format!("(r,n)=({r},{n}) μ={mu} shapes={shapes:?}: {c:?}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut transfers = 0;
    for s in 0..10 {
        let r = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let labels = simple_labels(r, n);
        let count = rng.gen_range(2..=3);
        let mut sum: Option<FdModule> = None;
        let mut all_zero = true;
        for _ in 0..count {
            let (mu, shapes) = labels.choose(&mut rng).unwrap();
            let charge = *[0i64, 0, 1, -1].choose(&mut rng).unwrap();
            all_zero &= charge == 0;
            let m = simple(mu, shapes, charge);
            sum = Some(match sum {
                None => m,
                Some(acc) => acc.direct_sum(&m).map_err(|e| e.to_string())?,
            });
        }
        let sum = sum.unwrap();
        let c = morita_check(&sum, &lambda).map_err(|e| e.to_string())?;
        if !c.passed() || c.cyclotomic_y != all_zero {
            return Err(format!("seeded sum {s} (r,n)=({r},{n}): {c:?}, all charges zero: {all_zero}"));
        }
        transfers += usize::from(!all_zero);
    }
    Ok(format!("{} simple modules and 10 seeded sums ({transfers} outside the quotient)", modules.len()))
}

fn branching(modules: &[(usize, usize, Composition, Vec<Partition>, FdModule)]) -> Outcome {
    let mut count = 0;
    for (_, _, mu, shapes, m) in modules.iter().filter(|m| m.0 <= 2) {
        let predicted = predicted_branch_dims(mu, shapes, 0).map_err(|e| e.to_string())?;
        let actual = restrict_branch(m).map_err(|e| e.to_string())?.iter().map(|s| ((s.k, s.a), s.module.dim())).collect();
        if predicted != actual {
            return Err(format!("μ={mu} shapes={shapes:?}: predicted {predicted:?}, found {actual:?}"));
        }
        count += 1;
    }
    Ok(format!("{count} restrictions match"))
}

fn crystal() -> Outcome {
    let lambda = WeightDatum::from_charges(&[0]);
    let mut lines = Vec::new();
    for (r, e) in [(1, 2u32), (2, 2), (2, 3)] {
        let (levels, graph) = tensor_crystal(&lambda, r, Some(e), 6);
        let sizes = graph.level_sizes();
        let predicted: Vec<usize> = (0..=6).map(|n| predicted_level_size(&lambda, r, Some(e), n)).collect();
        if sizes != predicted {
            return Err(format!("(r,e)=({r},{e}) levels {sizes:?}, enumeration {predicted:?}"));
        }
        for node in levels.iter().flatten() {
            for slot in &node.slots {
                for i in slot.addable_residues() {
                    if let Some(up) = slot.kashiwara_f(i) {
                        if up.kashiwara_e(i).as_ref() != Some(slot) {
                            return Err(format!("ẽ_{i} f̃_{i} {slot} ≠ {slot}"));
                        }
                    }
                }
                for i in slot.removable_residues() {
                    if let Some(down) = slot.kashiwara_e(i) {
                        if down.kashiwara_f(i).as_ref() != Some(slot) {
                            return Err(format!("f̃_{i} ẽ_{i} {slot} ≠ {slot}"));
                        }
                    }
                }
            }
        }
        lines.push(format!("(r,e)=({r},{e}) {sizes:?}"));
    }
    Ok(lines.join(", "))
}

fn graph_comparison() -> Outcome {
    let mut lines = Vec::new();
    for r in 1..=2 {
        let module = module_graph(r, 0, 3).map_err(|e| e.to_string())?;
        let (_, crystal) = tensor_crystal(&WeightDatum::from_charges(&[0]), r, None, 3);
        let rep = branch_graph_compare(&module, &crystal, 3);
        if !rep.isomorphic {
            return Err(format!("r={r}: {}", rep.first_divergence.unwrap_or_default()));
        }
        lines.push(format!("r={r} levels {:?}, {} arrows", rep.level_sizes.0, rep.arrow_counts.0));
    }
    Ok(lines.join(", "))
}

fn determinism() -> Outcome {
    let commands = [
        "relations --r 2 --n 3",
        "mult --r 2 --n 3 --expr g1g2X1Th1",
        "reduce --r 2 --n 2 --charge 0,1 --expr X2^3g1",
        "dims --r 2 --n 3 --build",
        "morita --r 2 --n 2",
        "branch --mu 2,1 --shapes 2|1",
        "blocks --r 2 --n 2",
        "crystal --r 2 --e 3 --n-max 4 --format json",
        "compare --r 2 --n-max 2",
    ];
    for c in commands {
        let args: Vec<&str> = ["yhk", "--json", "--seed", "7"].into_iter().chain(c.split_whitespace()).collect();
        let first = yhk::cli::run(args.clone());
        let second = yhk::cli::run(args);
        if first.0 != 0 || first.1.is_empty() {
            return Err(format!("`{c}` exited {} {}", first.0, first.2));
        }
        if first != second {
            return Err(format!("`{c}` produced different output on a second run"));
        }
    }
    Ok(format!("{} commands byte-identical", commands.len()))
}

fn main() {
    let mut failed = 0;
    let mut report = |id: usize, name: &str, f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} {name:<28} PASS  {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} {name:<28} FAIL  {detail} [{secs:.1}s]");
            }
        }
    };
    report(1, "relation suite", &relation_suite);
    report(2, "PBW well-definedness", &pbw_well_defined);
    report(3, "intertwiners", &intertwiners);
    report(4, "center", &center);
    report(5, "cyclotomic basis", &cyclotomic_basis);
    let modules = criterion6_modules();
    report(6, "semisimple classification", &|| classification(&modules));
    report(7, "Morita equivalence", &|| morita(&modules));
    report(8, "branching", &|| branching(&modules));
    report(9, "crystal levels", &crystal);
    report(10, "graph comparison", &graph_comparison);
    report(11, "determinism", &determinism);
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 11 acceptance criteria passed");
}
