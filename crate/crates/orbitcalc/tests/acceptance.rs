//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::{BTreeSet, HashMap};
use std::process::Command;
use std::time::Instant;

use orbitcalc_core::derivative::{b_k, comb_part_leq, composition_support, whittaker_support};
use orbitcalc_core::exceptional::{embedded_related_table, ClassMember};
use orbitcalc_core::oracle::{
    jordan_type, matrix_of_support, nilpotence_order, rank_exact, IntMatrix,
};
use orbitcalc_core::orbit::{orbits_of, valid_partitions};
use orbitcalc_core::partition::enumerate_partitions;
use orbitcalc_core::pl::{
    is_pl, levi_principal_partition, odd_multiplicity_parts, pl_set_of_orbit, reconstruct_orbit,
};
use orbitcalc_core::{Cap, GroupKind, Label, Partition};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn all(n: u32) -> Vec<Partition> {
    enumerate_partitions(n, Cap::DEFAULT).unwrap()
}

fn orbitcalc(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitcalc"))
        .args(args)
        .env_remove("ORBITCALC_CAP")
        .output()
        .map_err(err)?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited with {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    String::from_utf8(out.stdout).map_err(err)
}

fn counterexample_rows() -> Check {
    let rows = [
        ("O", "11", "7,3,1 = 5,5,1 + 7,2,2"),
        ("Sp", "10", "6,4 = 5,5 + 6,2,2"),
        ("O", "8", "5,3 = 4,4 + 5,1,1,1"),
    ];
    let mut worst = 0.0f64;
    for (g, d, row) in rows {
        let start = Instant::now();
        let out = orbitcalc(&["pl", "counterexamples", "--group", g, "--dim", d])?;
        let secs = start.elapsed().as_secs_f64();
        worst = worst.max(secs);
        ensure!(out.lines().any(|l| l == row), "{g}{d}: missing {row:?}");
        if secs > 10.0 {
            return Err(format!("{g}{d} took {secs:.1}s"));
        }
    }
    Ok(format!("slowest run {worst:.2}s"))
}

fn groups(d: u32) -> Vec<GroupKind> {
    let mut out = vec![
        GroupKind::type_a(d),
        GroupKind::orthogonal(d),
        GroupKind::special_orthogonal(d),
    ];
    if d.is_multiple_of(2) {
        out.push(GroupKind::symplectic(d).unwrap());
    }
    out
}

fn reconstruction() -> Check {
    let mut checked = 0usize;
    for d in 0..=20 {
        for g in groups(d) {
            let mut seen: HashMap<(BTreeSet<Partition>, Option<Label>), String> = HashMap::new();
            for orbit in orbits_of(g, Cap::DEFAULT).map_err(err)? {
                let set = pl_set_of_orbit(&orbit, Cap::DEFAULT).map_err(err)?;
                let back = reconstruct_orbit(&set).map_err(err)?;
                ensure!(back == orbit, "{orbit} reconstructs to {back}");
                let key = (set.members().clone(), set.label());
                if let Some(prev) = seen.insert(key, orbit.to_string()) {
                    return Err(format!("{prev} and {orbit} share a PL set"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} orbits"))
}

fn levi_construction() -> Check {
    let mut groups_checked = 0;
    for d in 0..=14 {
        let mut gs = vec![GroupKind::orthogonal(d)];
        if d % 2 == 0 {
            gs.push(GroupKind::symplectic(d).unwrap());
        }
        for g in gs {
            let mut from_levis = BTreeSet::new();
            for size in 0..=d / 2 {
                for kappa in all(size) {
                    let dp = d - 2 * size;
                    if g.kind() == orbitcalc_core::Kind::Symplectic && dp % 2 == 1 {
                        continue;
                    }
                    from_levis.insert(levi_principal_partition(g, &kappa, dp).map_err(err)?);
                }
            }
            let x_of_g: BTreeSet<Partition> = valid_partitions(g, Cap::DEFAULT)
                .map_err(err)?
                .into_iter()
                .filter(|l| odd_multiplicity_parts(l).len() <= 1)
                .collect();
            ensure!(
                from_levis == x_of_g,
                "{g}: Levi partitions differ from X(G)"
            );
            for l in &x_of_g {
                ensure!(is_pl(g, l).map_err(err)?, "{g} {l} not flagged PL");
            }
            groups_checked += 1;
        }
    }
    Ok(format!("{groups_checked} groups"))
}

fn comb_part() -> Check {
    let mut cases = 0usize;
    for n in 0..=12 {
        for lambda in all(n) {
            for k in 1..=n {
                let bk = b_k(&lambda, k);
                for mu in all(n - k) {
                    let direct = mu.insert_part(k).dominance_leq(&lambda).map_err(err)?;
                    let via_bk = match &bk {
                        Some(b) => mu.dominance_leq(b).map_err(err)?,
                        None => false,
                    };
                    ensure!(
                        direct == via_bk
                            && direct == comb_part_leq(&mu, k, &lambda).map_err(err)?,
                        "λ={lambda} k={k} μ={mu}"
                    );
                    cases += 1;
                }
                if n <= 10 {
                    let below: Vec<Partition> = all(n - k)
                        .into_iter()
                        .filter(|mu| mu.insert_part(k).dominance_leq(&lambda).unwrap())
                        .collect();
                    let max: Vec<&Partition> = below
                        .iter()
                        .filter(|m| below.iter().all(|o| o.dominance_leq(m).unwrap()))
                        .collect();
                    match (&bk, max.as_slice()) {
                        (None, []) => {}
                        (Some(b), [m]) if b == *m => {}
                        _ => return Err(format!("b_{k}({lambda}) is not the maximum")),
                    }
                }
            }
        }
    }
    Ok(format!("{cases} triples"))
}

fn shift_first(parts: &[u32], k: u32, up: bool) -> Partition {
    let len = parts.len().max(k as usize);
    let v: Vec<u32> = (0..len)
        .map(|i| {
            let x = parts.get(i).copied().unwrap_or(0);
            match (i < k as usize, up) {
                (true, true) => x + 1,
                (true, false) => x.saturating_sub(1),
                _ => x,
            }
        })
        .collect();
    Partition::from_unsorted(v.into_iter().filter(|&x| x > 0))
}

fn transpose_identities() -> Check {
    for n in 0..=12 {
        let ps = all(n);
        for a in &ps {
            for b in &ps {
                let fwd = a.dominance_leq(b).map_err(err)?;
                let back = b.transpose().dominance_leq(&a.transpose()).map_err(err)?;
                ensure!(fwd == back, "order reversal fails for {a}, {b}");
            }
            for k in 1..=12u32 {
                let added = shift_first(a.transpose().parts(), k, true);
                ensure!(a.insert_part(k).transpose() == added, "{a} ∪ {k}");
            }
            for k in 1..=a.largest() {
                let removed = shift_first(a.transpose().parts(), k, false);
                let bk = b_k(a, k).ok_or_else(|| format!("b_{k}({a}) missing"))?;
                ensure!(bk.transpose() == removed, "b_{k}({a})");
            }
        }
    }
    Ok("n ≤ 12".into())
}

fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn whittaker_realization() -> Check {
    let mut count = 0usize;
    for n in 1..=12 {
        for lambda in all(n) {
            let s = whittaker_support(&lambda).map_err(err)?;
            let j = jordan_type(&matrix_of_support(&s)).map_err(err)?;
            ensure!(j == lambda, "ψ_{lambda} has Jordan type {j}");
            count += 1;
        }
    }
    for n in 1..=10 {
        for alpha in compositions(n) {
            let s = composition_support(&alpha).map_err(err)?;
            let j = jordan_type(&matrix_of_support(&s)).map_err(err)?;
            let sorted = Partition::from_unsorted(alpha.iter().copied());
            ensure!(j == sorted, "ψ_{alpha:?} has Jordan type {j}");
            count += 1;
        }
    }
    Ok(format!("{count} characters"))
}

fn members(names: &[(&str, bool)]) -> BTreeSet<ClassMember> {
    names
        .iter()
        .map(|&(name, special)| ClassMember {
            name: name.into(),
            special,
        })
        .collect()
}

fn exceptional_table() -> Check {
    let table = embedded_related_table();
    ensure!(table.len() == 14, "{} rows", table.len());
    let has = |group: &str, m: BTreeSet<ClassMember>| {
        table
            .iter()
            .any(|c| c.group == group && c.orbits.iter().cloned().collect::<BTreeSet<_>>() == m)
    };
    ensure!(
        has("G2", members(&[("G2(a1)", true), ("A~1", false)])),
        "G2 row"
    );
    ensure!(
        has(
            "E8",
            members(&[
                ("E8(a7)", true),
                ("E7(a5)", false),
                ("E6(a3)+A1", false),
                ("D6(a2)", false)
            ])
        ),
        "E8 four-element row"
    );
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/g2.poset");
    let out = orbitcalc(&["exceptional", "related", "--file", fixture])?;
    ensure!(out == "G2: G2(a1)*, A~1\n", "G2 ingest gave {out:?}");

    let dir = tempfile::tempdir().map_err(err)?;
    let bad = dir.path().join("g2.poset");
    let text = std::fs::read_to_string(fixture).map_err(err)?;
    std::fs::write(
        &bad,
        text.replace("orbit A1 special=0 pl=1", "orbit A1 special=0 pl=0"),
    )
    .map_err(err)?;
    ensure!(
        orbitcalc(&["exceptional", "related", "--file", bad.to_str().unwrap()]).is_err(),
        "altered G2 poset was accepted"
    );
    Ok("14 rows, G2 ingest".into())
}

fn rank_and_depth() -> Check {
    let mut count = 0;
    for n in 1..=10 {
        for lambda in all(n) {
            let x: IntMatrix = matrix_of_support(&whittaker_support(&lambda).map_err(err)?);
            let rank = rank_exact(&x);
            let order = nilpotence_order(&x).map_err(err)?;
            ensure!(
                rank as u32 == n - lambda.len() as u32,
                "rank of {lambda}: {rank}"
            );
            ensure!(
                order as u32 == lambda.largest(),
                "depth of {lambda}: {order}"
            );
            count += 1;
        }
    }
    Ok(format!("{count} partitions"))
}

fn determinism() -> Check {
    let commands: &[&[&str]] = &[
        &[
            "orbit",
            "info",
            "--group",
            "O",
            "--dim",
            "11",
            "--partition",
            "7,3,1",
        ],
        &[
            "orbit",
            "compare",
            "--group",
            "Sp",
            "--dim",
            "8",
            "--partition",
            "4,4",
            "--partition",
            "6,2",
        ],
        &[
            "pl",
            "set",
            "--group",
            "SO",
            "--dim",
            "12",
            "--partition",
            "6,6:I",
        ],
        &[
            "pl",
            "reconstruct",
            "--group",
            "O",
            "--dim",
            "11",
            "--partition",
            "5,5,1",
            "--partition",
            "7,2,2",
        ],
        &["deriv", "bk", "--partition", "4,3,3,1", "--k", "2"],
        &["whittaker", "support", "--partition", "4,2,1"],
        &["poset", "export", "--group", "Sp", "--dim", "10"],
        &["exceptional", "related"],
        &["pl", "counterexamples", "--group", "O", "--dim", "11"],
        &["pl", "counterexamples", "--group", "Sp", "--dim", "12"],
    ];
    for cmd in commands {
        let mut outputs = BTreeSet::new();
        for threads in ["1", "4", "1", "0"] {
            let mut args = cmd.to_vec();
            args.extend(["--json", "--threads", threads]);
            outputs.insert(orbitcalc(&args)?);
        }
        ensure!(outputs.len() == 1, "{cmd:?} output varies");
    }
    Ok(format!("{} commands", commands.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 counterexample rows", counterexample_rows),
        ("2 reconstruction d<=20", reconstruction),
        ("3 Levi partitions = X(G)", levi_construction),
        ("4 combinatorial derivative", comb_part),
        ("5 transpose identities", transpose_identities),
        ("6 Whittaker realization", whittaker_realization),
        ("7 exceptional table", exceptional_table),
        ("8 rank and depth", rank_and_depth),
        ("9 deterministic JSON", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(note) => println!("PASS {name} ({note}, {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
