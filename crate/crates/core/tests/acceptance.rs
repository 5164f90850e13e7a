//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.
//! Set `GSFT_BLESS=1` to rewrite the CLI golden files.

mod common;

use std::path::{Path, PathBuf};
use std::time::Instant;

use gsft::alphabet::{Subgroup, Tuple};
use gsft::blocks::{PeriodicConfig, Word};
use gsft::ca::GroupCA;
use gsft::catalog;
use gsft::chains::{intersect_chain, iterate_images, RationalOrbitShift};
use gsft::cli::run_command;
use gsft::periodic::{density_report, is_irreducible};
use gsft::shiftspace::{
    decode_higher_block, induce_from_subgroup, recode_higher_block, restrict_to_subgroup, GroupSFT,
};
use rand::Rng;

use common::*;

struct Verdict {
    passed: usize,
    total: usize,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            passed: 0,
            total: 0,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.notes.len() < 5 {
            self.notes.push(note());
        }
    }

    fn ok(&self) -> bool {
        self.passed == self.total
    }
}

fn label(s: &GroupSFT) -> String {
    format!("{} window {} order {}", s.alphabet().describe(), s.window(), s.pattern().order())
}

fn c1_identity() -> Verdict {
    let mut v = Verdict::new();
    for s in sft_corpus(1, 100) {
        let a = s.alphabet();
        let id = PeriodicConfig::repeat(Word::identity(a, 1)).unwrap();
        let ok = s.member_periodic(&id).unwrap()
            && (1..=8).all(|k| s.blocks(k).unwrap().contains(&a.identity_tuple(k)));
        v.check(ok, || label(&s));
    }
    v
}

fn c2_restriction_oracle() -> Verdict {
    let mut v = Verdict::new();
    for s in sft_corpus(1, 100) {
        let q = s.alphabet().order();
        for k in (1..=6).filter(|&k| q.pow(k as u32) <= 4096) {
            let lib: Subgroup = s.blocks(k).unwrap();
            let order: usize = lib.order().try_into().unwrap();
            let brute = brute_windows(&s, k, k + s.window(), order);
            let ok = brute.len() == order && brute.iter().all(|w| lib.contains(w));
            v.check(ok, || format!("{} k={k}: blocks {order}, brute force {}", label(&s), brute.len()));
        }
    }
    v
}

fn c3_dcc() -> Verdict {
    let mut v = Verdict::new();
    for (tau, _) in ca_corpus(3, 20) {
        let r = iterate_images(&tau, &GroupSFT::full(tau.domain()), 16, 64).unwrap();
        let index = r.stabilization_index.unwrap();
        let ok = r.confirmed && index <= r.bound && r.strict_descents <= r.bound;
        v.check(ok, || format!("image chain: index {index}, bound {}", r.bound));
    }
    let mut rng = rng(4);
    let alphabets = small_alphabets();
    for _ in 0..20 {
        let a = &alphabets[rng.gen_range(0..alphabets.len())];
        let mut shifts: Vec<GroupSFT> = (0..5)
            .map(|_| {
                let m = rng.gen_range(1..=3);
                let big = rng.gen_range(2..=4);
                let gens: Vec<Tuple> = (0..big).map(|_| random_tuple(a, m, &mut rng)).collect();
                GroupSFT::from_generators(a, m, &gens).unwrap()
            })
            .collect();
        shifts.push(shifts.last().unwrap().clone());
        let (_, r) = intersect_chain(&shifts).unwrap();
        let index = r.stabilization_index.unwrap();
        let ok = r.confirmed && index <= r.bound && r.strict_descents <= r.bound;
        v.check(ok, || {
            format!(
                "intersection chain over {}: index {index}, strict descents {}, bound {}",
                a.describe(),
                r.strict_descents,
                r.bound
            )
        });
    }
    v
}

fn c4_sofic() -> Verdict {
    let mut v = Verdict::new();
    for (tau, s) in ca_corpus(5, 20) {
        let m = tau.memory();
        let r = match tau.image_report(&s, 16) {
            Ok(r) => r,
            Err(e) => {
                v.check(false, || format!("{}: {e}", label(&s)));
                continue;
            }
        };
        let w = r.window;
        let q = |k: usize| tau.block_map(k).unwrap().image(&s.blocks(k + m - 1).unwrap()).unwrap();
        let certificate = w >= r.minimal_window
            && GroupSFT::new(q(w)).unwrap().blocks(w + 1).unwrap() == q(w + 1)
            && r.sft.pattern() == &q(w);
        let blocks = (1..=6).all(|k| r.sft.blocks(k).unwrap() == q(k));
        v.check(certificate && blocks, || format!("{} memory {m}: window {w}", label(&s)));
    }
    v
}

fn c5_preimage() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = rng(6);
    for (tau, _) in ca_corpus(5, 20) {
        let b = tau.codomain().clone();
        let s2 = random_sft(&b, 2, &mut rng);
        let target = pattern_set(&s2);
        let pre = tau.preimage_sft(&s2).unwrap();
        let a = tau.domain();
        let m = tau.memory();
        let q = a.order();
        let mut agree = true;
        for p in (1..=6).filter(|&p| q.pow(p as u32) <= 4096) {
            for w in all_words(a, p) {
                let lhs = pre.member_periodic(&PeriodicConfig::repeat(Word::new(a, w.clone()).unwrap()).unwrap()).unwrap();
                let y: Tuple = (0..p)
                    .map(|i| {
                        let x: Tuple = (0..m).map(|j| w[(i + j) % p]).collect();
                        tau.rule().apply(&x).unwrap()[0]
                    })
                    .collect();
                agree &= lhs == periodic_ok(&target, 2, &y);
            }
        }
        v.check(agree, || format!("memory {m} over {}", a.describe()));
    }
    v
}

fn c6_limit_sets() -> Verdict {
    let mut v = Verdict::new();
    let d = catalog::tau_drop().limit_set(&catalog::full(&catalog::gf2_2()), 16, 64).unwrap();
    v.check(d.stability_index == 1 && d.omega.equals(&catalog::second_zero()).unwrap(), || {
        format!("τ_drop: index {}", d.stability_index)
    });
    let gf2 = catalog::gf(2);
    let id = GroupCA::identity(&gf2).limit_set(&catalog::full(&gf2), 16, 64).unwrap();
    v.check(id.stability_index == 0, || "identity CA".into());
    for (tau, _) in ca_corpus(5, 20) {
        let omega = tau.limit_set(&GroupSFT::full(tau.domain()), 16, 64).unwrap().omega;
        let ok = tau.image_sft(&omega).unwrap().equals(&omega).unwrap();
        v.check(ok, || format!("memory {} over {}", tau.memory(), tau.domain().describe()));
    }
    v
}

fn shift_corpus() -> Vec<GroupSFT> {
    let mut out: Vec<GroupSFT> = ca_corpus(5, 20).into_iter().map(|(_, s)| s).collect();
    out.extend([
        catalog::constants(2),
        catalog::constants(3),
        catalog::zero_trap(),
        catalog::orbit(3, 2),
        catalog::orbit(5, 2),
        catalog::second_zero(),
        catalog::delay(),
        catalog::swap(),
    ]);
    out
}

fn c7_density() -> Verdict {
    let mut v = Verdict::new();
    for s in shift_corpus() {
        if !is_irreducible(&s).unwrap() {
            continue;
        }
        let r = density_report(&s, 5, 12, false).unwrap();
        v.check(r.coverage == 1.0, || format!("{}: coverage {}", label(&s), r.coverage));
    }
    v
}

fn c8_counterexample() -> Verdict {
    let mut v = Verdict::new();
    for a in ["2", "-2", "3/2", "-5/3"] {
        let r = RationalOrbitShift::parse(a).unwrap().counterexample(16).unwrap();
        let ok = r.rows.len() == 16 && r.rows.iter().all(|row| row.solution_dim == 0) && r.all_periods_zero;
        v.check(ok, || format!("a = {a}"));
    }
    v
}

fn c9_recoding() -> Verdict {
    let mut v = Verdict::new();
    let corpus: Vec<GroupSFT> = shift_corpus().into_iter().filter(|s| s.window() <= 2).take(10).collect();
    for s in &corpus {
        for d in [2, 3] {
            let induced = induce_from_subgroup(s, d).unwrap();
            let back = restrict_to_subgroup(&induced, d).unwrap();
            let decoded = decode_higher_block(&recode_higher_block(s, d).unwrap(), s.alphabet(), d).unwrap();
            let ok = back.equals(s).unwrap() && decoded.equals(s).unwrap();
            v.check(ok, || format!("{} d={d}", label(s)));
        }
    }
    v
}

/// Golden CLI invocations: file stem and arguments.
fn golden_commands() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("essentialize-zero-trap", vec!["essentialize", "specs/zero-trap.json"]),
        ("blocks-delay", vec!["blocks", "specs/delay.json", "--k", "3"]),
        ("widen-constants", vec!["widen", "specs/constants.json", "--to", "4", "--format", "table"]),
        ("intersect", vec!["intersect", "specs/constants.json", "specs/zero-trap.json"]),
        ("equals", vec!["equals", "specs/constants.json", "specs/zero-trap.json"]),
        ("image-sign", vec!["image", "specs/sign-ca.json"]),
        ("preimage-sum", vec!["preimage", "specs/sum-ca.json", "specs/constants.json"]),
        ("kernel-drop", vec!["kernel", "specs/drop-ca.json"]),
        ("limit-set-drop", vec!["limit-set", "specs/drop-ca.json", "specs/full-shift.json"]),
        ("periodic-orbit3", vec!["periodic", "specs/orbit3.json", "--period", "3"]),
        ("periodic-query", vec!["periodic", "specs/query-words.json"]),
        ("irreducible-swap", vec!["irreducible", "specs/swap.json"]),
        ("w-check-delay", vec!["w-check", "specs/delay.json", "--max-filler", "2", "--max-len", "3"]),
        ("density-delay", vec!["density", "specs/delay.json", "--max-len", "4", "--max-period", "8"]),
        ("chain-table", vec!["chain", "specs/chain-drop.json", "specs/chain-mixed.json", "--format", "table"]),
        ("chain-json", vec!["chain", "specs/chain-drop.json", "specs/chain-mixed.json"]),
        ("markov-shift-equality", vec!["markov-window", "specs/markov-shift-equality.json"]),
        ("markov-kernel", vec!["markov-window", "specs/markov-kernel.json", "--format", "table"]),
        ("counterexample-2", vec!["counterexample", "--a", "2", "--max-period", "16"]),
        ("counterexample-5-3", vec!["counterexample", "--a=-5/3", "--max-period", "16", "--format", "table"]),
        ("export-dot-delay", vec!["export-dot", "specs/delay.json"]),
        ("invalid-prime", vec!["blocks", "specs/invalid-prime.json", "--k", "1"]),
        ("invalid-arity", vec!["blocks", "specs/invalid-arity.json", "--k", "1"]),
        ("cap-image", vec!["image", "specs/sum-ca.json", "--max-window", "0"]),
        ("invalid-a", vec!["counterexample", "--a", "1"]),
    ]
}

fn render(args: &[&str]) -> String {
    let out = run_command(std::iter::once("gsft").chain(args.iter().copied()));
    format!("exit: {}\n{}", out.code, out.stdout)
}

fn c10_determinism(root: &Path) -> Verdict {
    let mut v = Verdict::new();
    let bless = std::env::var_os("GSFT_BLESS").is_some();
    let dir = root.join("tests/golden");
    if bless {
        std::fs::create_dir_all(&dir).unwrap();
    }
    for (name, args) in golden_commands() {
        let first = render(&args);
        let second = render(&args);
        let mut parallel_args = args.clone();
        parallel_args.push("--parallel");
        let parallel = render(&parallel_args);
        let path: PathBuf = dir.join(format!("{name}.out"));
        if bless {
            std::fs::write(&path, &first).unwrap();
        }
        let golden = std::fs::read_to_string(&path).unwrap_or_default();
        let ok = first == second && first == parallel && first == golden;
        v.check(ok, || format!("{name}: golden match {}, parallel match {}", first == golden, first == parallel));
    }
    v
}

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    std::env::set_current_dir(root).unwrap();
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("identity membership", Box::new(c1_identity)),
        ("restriction oracle", Box::new(c2_restriction_oracle)),
        ("DCC stabilization", Box::new(c3_dcc)),
        ("SFT from sofic", Box::new(c4_sofic)),
        ("preimage correctness", Box::new(c5_preimage)),
        ("limit-set stability", Box::new(c6_limit_sets)),
        ("periodic density", Box::new(c7_density)),
        ("rational counterexample", Box::new(c8_counterexample)),
        ("recoding round trips", Box::new(c9_recoding)),
        ("CLI determinism", Box::new(move || c10_determinism(root))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let status = if v.ok() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name}: {}/{} ({:.1}s)",
            i + 1,
            v.passed,
            v.total,
            start.elapsed().as_secs_f64()
        );
        for n in &v.notes {
            println!("    {n}");
        }
        if !v.ok() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
