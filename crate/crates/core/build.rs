//! Generates the bundled structure-constant tables from commutators of
//! integer matrices. Coordinates are read off at one pivot entry per basis
//! matrix, and every product is rebuilt from those coordinates and compared
//! with the commutator before a table is written.

use std::env;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

type Mat = Vec<Vec<i64>>;

struct Basis {
    names: Vec<String>,
    mats: Vec<Mat>,
    pivots: Vec<(usize, usize)>,
}

fn unit(n: usize, i: usize, j: usize) -> Mat {
    let mut m = vec![vec![0; n]; n];
    m[i][j] = 1;
    m
}

fn lin(terms: &[(i64, &Mat)]) -> Mat {
    let n = terms[0].1.len();
    let mut out = vec![vec![0; n]; n];
    for (c, m) in terms {
        for i in 0..n {
            for j in 0..n {
                out[i][j] += c * m[i][j];
            }
        }
    }
    out
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    lin(&[(1, &mul(a, b)), (-1, &mul(b, a))])
}

/// `table[j][l]` = coordinates of `[b_j, b_l]`.
fn bracket_table(basis: &Basis) -> Vec<Vec<Vec<i64>>> {
    let n = basis.mats.len();
    for (k, &(r, c)) in basis.pivots.iter().enumerate() {
        for (m, mat) in basis.mats.iter().enumerate() {
            let v = mat[r][c];
            assert!(
                if m == k { v.abs() == 1 } else { v == 0 },
                "bad pivot for {}",
                basis.names[k]
            );
        }
    }
    (0..n)
        .map(|j| {
            (0..n)
                .map(|l| {
                    let br = commutator(&basis.mats[j], &basis.mats[l]);
                    let coords: Vec<i64> = basis
                        .pivots
                        .iter()
                        .enumerate()
                        .map(|(k, &(r, c))| br[r][c] * basis.mats[k][r][c])
                        .collect();
                    let terms: Vec<(i64, &Mat)> = coords.iter().copied().zip(&basis.mats).collect();
                    assert_eq!(
                        lin(&terms),
                        br,
                        "[{}, {}] leaves the span",
                        basis.names[j],
                        basis.names[l]
                    );
                    coords
                })
                .collect()
        })
        .collect()
}

fn to_json(names: &[String], table: &[Vec<Vec<i64>>]) -> String {
    let n = names.len();
    let quoted: Vec<String> = names.iter().map(|s| format!("\"{s}\"")).collect();
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"field\": {{\"tag\": \"rationals\"}},").unwrap();
    writeln!(out, "  \"dim\": {n},").unwrap();
    writeln!(out, "  \"basis\": [{}],", quoted.join(", ")).unwrap();
    let mut entries = Vec::new();
    for (j, row) in table.iter().enumerate() {
        for (l, coords) in row.iter().enumerate() {
            if coords.iter().all(|&c| c == 0) {
                continue;
            }
            let cs: Vec<String> = coords.iter().map(|c| format!("\"{c}\"")).collect();
            entries.push(format!(
                "    {{\"j\": {}, \"l\": {}, \"coords\": [{}]}}",
                j + 1,
                l + 1,
                cs.join(", ")
            ));
        }
    }
    if entries.is_empty() {
        writeln!(out, "  \"brackets\": []").unwrap();
    } else {
        writeln!(out, "  \"brackets\": [\n{}\n  ]", entries.join(",\n")).unwrap();
    }
    out.push_str("}\n");
    out
}

fn gl(n: usize) -> Basis {
    let mut b = Basis {
        names: vec![],
        mats: vec![],
        pivots: vec![],
    };
    for i in 0..n {
        for j in 0..n {
            b.names.push(format!("E{}{}", i + 1, j + 1));
            b.mats.push(unit(n, i, j));
            b.pivots.push((i, j));
        }
    }
    b
}

fn named(names: &[&str], mats: Vec<Mat>, pivots: Vec<(usize, usize)>) -> Basis {
    Basis {
        names: names.iter().map(|s| s.to_string()).collect(),
        mats,
        pivots,
    }
}

fn main() {
    println!("cargo:rerun-if-changed=build.rs");
    let out = Path::new(&env::var("OUT_DIR").unwrap()).join("algebras");
    fs::create_dir_all(&out).unwrap();
    let mut tables: Vec<(String, String)> = Vec::new();

    for n in 1..=4 {
        let b = gl(n);
        tables.push((format!("gl{n}"), to_json(&b.names, &bracket_table(&b))));
    }

    let sl2 = named(
        &["h", "e", "f"],
        vec![
            lin(&[(1, &unit(2, 0, 0)), (-1, &unit(2, 1, 1))]),
            unit(2, 0, 1),
            unit(2, 1, 0),
        ],
        vec![(0, 0), (0, 1), (1, 0)],
    );
    tables.push(("sl2".into(), to_json(&sl2.names, &bracket_table(&sl2))));

    let so3 = named(
        &["L1", "L2", "L3"],
        vec![
            lin(&[(1, &unit(3, 2, 1)), (-1, &unit(3, 1, 2))]),
            lin(&[(1, &unit(3, 0, 2)), (-1, &unit(3, 2, 0))]),
            lin(&[(1, &unit(3, 1, 0)), (-1, &unit(3, 0, 1))]),
        ],
        vec![(2, 1), (0, 2), (1, 0)],
    );
    tables.push(("so3".into(), to_json(&so3.names, &bracket_table(&so3))));

    let heis = named(
        &["x", "y", "z"],
        vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)],
        vec![(0, 1), (1, 2), (0, 2)],
    );
    let heis_table = bracket_table(&heis);
    tables.push(("heisenberg".into(), to_json(&heis.names, &heis_table)));

    // Heisenberg with [x, z] = x added antisymmetrically: the bracket stays
    // alternating but the Jacobi identity fails on (x, y, z).
    let mut broken = heis_table;
    broken[0][2][0] += 1;
    broken[2][0][0] -= 1;
    tables.push(("broken".into(), to_json(&heis.names, &broken)));

    for n in 1..=6 {
        let b = Basis {
            names: (1..=n).map(|j| format!("a{j}")).collect(),
            mats: (0..n).map(|j| unit(n, j, j)).collect(),
            pivots: (0..n).map(|j| (j, j)).collect(),
        };
        tables.push((format!("abelian{n}"), to_json(&b.names, &bracket_table(&b))));
    }

    let mut index = String::from("/// Bundled tables as `(name, json)`.\npub const BUNDLED: &[(&str, &str)] = &[\n");
    for (name, json) in &tables {
        fs::write(out.join(format!("{name}.json")), json).unwrap();
        writeln!(
            index,
            "    (\"{name}\", include_str!(concat!(env!(\"OUT_DIR\"), \"/algebras/{name}.json\"))),"
        )
        .unwrap();
    }
    index.push_str("];\n");
    fs::write(Path::new(&env::var("OUT_DIR").unwrap()).join("library.rs"), index).unwrap();
}
