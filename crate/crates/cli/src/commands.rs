use parahoric_core::apartment::{self, ApartmentPoint};
use parahoric_core::dimension::{self, ModuliSpec};
use parahoric_core::parabolic::{self, ParabolicLine};
use parahoric_core::parahoric::{self, ParahoricDescriptor};
use parahoric_core::rational::format_fraction;
use parahoric_core::wire::{DescriptorRecord, LocalTypeRecord};
use parahoric_core::{localtype, RootSystem, SimpleType, Q};
use serde_json::{json, Value};

use crate::render::{Rendered, Table};
use crate::{Exponents, Fractions};

type CmdResult = Result<Rendered, String>;

fn point(rs: &RootSystem, flag: &str, f: &Fractions) -> Result<ApartmentPoint, String> {
    ApartmentPoint::new(rs, f.0.clone()).map_err(|e| format!("{flag}: {e}"))
}

fn fracs(v: &[Q]) -> Vec<String> {
    v.iter().map(format_fraction).collect()
}

fn show_q(v: &[Q]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn show_i(v: &[i64]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn root_name(coords: &[i64]) -> String {
    show_i(coords)
}

pub fn roots(rs: &RootSystem) -> CmdResult {
    let mut t = Table::new(
        Some(format!("roots of {}", rs.name())),
        &["index", "root", "height", "coroot"],
    );
    let mut list = Vec::new();
    for id in rs.root_ids() {
        let r = rs.root(id);
        t.row(vec![
            id.0.to_string(),
            root_name(&r.coords),
            r.height().to_string(),
            show_i(&r.coroot),
        ]);
        list.push(json!({"root": r.coords, "height": r.height(), "coroot": r.coroot}));
    }
    let summary = Table::kv(
        Some(format!("root system {}", rs.name())),
        vec![
            ("rank", rs.rank().to_string()),
            ("roots", rs.roots().len().to_string()),
            ("dim_g", rs.dim_g().to_string()),
            ("marks", show_i(rs.marks())),
            (
                "cartan",
                rs.cartan()
                    .iter()
                    .map(|r| show_i(r))
                    .collect::<Vec<_>>()
                    .join(";"),
            ),
        ],
    );
    Ok(Rendered {
        json: json!({
            "type": rs.name(),
            "rank": rs.rank(),
            "dim_g": rs.dim_g(),
            "cartan": rs.cartan(),
            "marks": rs.marks(),
            "roots": list,
        }),
        tables: vec![summary, t],
    })
}

pub fn alcove(rs: &RootSystem) -> CmdResult {
    let classes = parahoric::enumerate_maximal_classes(rs).map_err(|e| e.to_string())?;
    let mut t = Table::new(
        Some(format!("alcove vertices of {}", rs.name())),
        &["theta", "facet_dim", "maximal", "hyperspecial", "standard"],
    );
    let mut list = Vec::new();
    for d in &classes {
        t.row(vec![
            show_q(d.theta.coords()),
            d.facet.dimension.to_string(),
            d.flags.maximal.to_string(),
            d.flags.hyperspecial.to_string(),
            d.flags.standard.to_string(),
        ]);
        list.push(json!({"theta": fracs(d.theta.coords()), "facet_dimension": d.facet.dimension, "flags": d.flags}));
    }
    Ok(Rendered {
        json: json!({"type": rs.name(), "marks": rs.marks(), "vertices": list}),
        tables: vec![t],
    })
}

fn descriptor_tables(rs: &RootSystem, d: &ParahoricDescriptor, title: &str) -> Vec<Table> {
    let summary = Table::kv(
        Some(title.to_string()),
        vec![
            ("theta", show_q(d.theta.coords())),
            ("facet_dimension", d.facet.dimension.to_string()),
            ("maximal", d.flags.maximal.to_string()),
            ("hyperspecial", d.flags.hyperspecial.to_string()),
            ("standard", d.flags.standard.to_string()),
        ],
    );
    let mut t = Table::new(None, &["root", "m"]);
    for r in rs.root_ids() {
        t.row(vec![
            root_name(&rs.root(r).coords),
            d.exponents.get(r).to_string(),
        ]);
    }
    vec![summary, t]
}

pub fn parahoric(rs: &RootSystem, thetas: &[Fractions]) -> CmdResult {
    let points = thetas
        .iter()
        .map(|f| point(rs, "--theta", f))
        .collect::<Result<Vec<_>, _>>()?;
    let d = if points.len() == 1 {
        parahoric::descriptor(rs, &points[0])
    } else {
        parahoric::descriptor_of_set(rs, &points)
    }
    .map_err(|e| format!("--theta: {e}"))?;
    let mut json = serde_json::to_value(DescriptorRecord::new(rs, &d)).expect("records serialize");
    let levi: Vec<Vec<i64>> = parahoric::levi_roots(rs, &d.theta)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|&r| rs.root(r).coords.clone())
        .collect();
    json["levi_roots"] = json!(levi);
    let mut tables = descriptor_tables(rs, &d, &format!("parahoric descriptor in {}", rs.name()));
    if d.flags.standard {
        let i = parahoric::closed_fiber_parabolic(rs, &d.theta).map_err(|e| e.to_string())?;
        let one_based: Vec<usize> = i.iter().map(|x| x + 1).collect();
        json["closed_fiber_parabolic"] = json!(one_based);
        tables[0].row(vec![
            "closed_fiber_parabolic".into(),
            format!(
                "{{{}}}",
                one_based
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        ]);
    }
    tables[0].row(vec![
        "levi_roots".into(),
        levi.iter()
            .map(|r| format!("({})", show_i(r)))
            .collect::<Vec<_>>()
            .join(" "),
    ]);
    Ok(Rendered { json, tables })
}

pub fn localtype(
    rs: &RootSystem,
    theta: Option<&Fractions>,
    local: Option<(u64, Vec<i64>)>,
) -> CmdResult {
    let (lt, alcove_theta) = match (theta, local) {
        (Some(f), _) => {
            let p = point(rs, "--theta", f)?;
            let lt = localtype::local_rep_of_weight(rs, &p).map_err(|e| format!("--theta: {e}"))?;
            let red = apartment::reduce_to_alcove(rs, &p).map_err(|e| e.to_string())?;
            (lt, red.point)
        }
        (None, Some((d, delta))) => {
            let lt = localtype::LocalType::new(rs, d, delta.clone())
                .map_err(|e| format!("--d/--delta: {e}"))?;
            let red = localtype::weight_of_local_rep(rs, d, &delta)
                .map_err(|e| format!("--delta: {e}"))?;
            (lt, red.point)
        }
        (None, None) => return Err("give either --theta or --d with --delta".into()),
    };
    let lt =
        localtype::LocalType::new(rs, lt.d, lt.normalized_delta()).map_err(|e| e.to_string())?;
    let record = LocalTypeRecord::new(rs, &lt, alcove_theta.coords().to_vec());
    let mut json = serde_json::to_value(&record).expect("records serialize");
    let mut t = Table::new(None, &["root", "r(Delta)", "action"]);
    let mut actions = Vec::new();
    for r in rs.root_ids() {
        let p = localtype::delta_pairing(rs, &lt, r).map_err(|e| e.to_string())?;
        let a = localtype::root_group_action(rs, &lt, r).map_err(|e| e.to_string())?;
        t.row(vec![
            root_name(&rs.root(r).coords),
            p.to_string(),
            a.to_string(),
        ]);
        actions.push(json!({"root": rs.root(r).coords, "pairing": p, "action": a}));
    }
    json["root_actions"] = json!(actions);
    let summary = Table::kv(
        Some(format!("local type in {}", rs.name())),
        vec![
            ("d", lt.d.to_string()),
            ("delta_coroot_coords", show_i(&lt.delta)),
            ("theta", show_q(lt.theta.coords())),
            ("alcove_theta", show_q(alcove_theta.coords())),
        ],
    );
    Ok(Rendered {
        json,
        tables: vec![summary, t],
    })
}

pub fn hyperspecial(max_rank: usize) -> CmdResult {
    let mut t = Table::new(
        Some(format!("hyperspecial vertices, rank <= {max_rank}")),
        &["type", "marks", "maximal", "hyperspecial"],
    );
    let mut list = Vec::new();
    for kind in SimpleType::ALL {
        for rank in kind.ranks_up_to(max_rank) {
            let rs = RootSystem::new(&[(kind, rank)]).map_err(|e| e.to_string())?;
            let classes = parahoric::enumerate_maximal_classes(&rs).map_err(|e| e.to_string())?;
            let hs = classes.iter().filter(|d| d.flags.hyperspecial).count();
            t.row(vec![
                rs.name(),
                show_i(rs.marks()),
                classes.len().to_string(),
                hs.to_string(),
            ]);
            list.push(json!({
                "type": rs.name(),
                "kind": kind,
                "rank": rank,
                "marks": rs.marks(),
                "maximal": classes.len(),
                "hyperspecial": hs,
            }));
        }
    }
    Ok(Rendered {
        json: json!({"max_rank": max_rank, "types": list}),
        tables: vec![t],
    })
}

pub fn dimension(rs: &RootSystem, genus: u32, thetas: &[Fractions], mu_nu: bool) -> CmdResult {
    let weights = thetas
        .iter()
        .map(|f| point(rs, "--theta", f))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = ModuliSpec::new(rs, genus, weights).map_err(|e| format!("--theta: {e}"))?;
    let report = spec.report(mu_nu).map_err(|e| e.to_string())?;
    let mut summary = Table::kv(
        Some(format!("dimensions for {} in genus {genus}", rs.name())),
        vec![
            ("dim_k", report.dim_k.to_string()),
            ("rep_space_dim", report.rep_space_dim.to_string()),
            ("moduli_dim", report.moduli_dim.to_string()),
            ("residue", report.residue.to_string()),
        ],
    );
    for n in &report.notices {
        summary.row(vec!["notice".into(), n.clone()]);
    }
    let mut points = Table::new(None, &["point", "theta", "e"]);
    for (i, (w, e)) in report.weights.iter().zip(&report.e).enumerate() {
        points.row(vec![(i + 1).to_string(), show_q(w.coords()), e.to_string()]);
    }
    let mut tables = vec![summary, points];
    if let Some(rows) = &report.mu_nu {
        let mut t = Table::new(
            Some("simple roots".into()),
            &["alpha", "mark", "mu", "nu", "dim_G/P", "e"],
        );
        for r in rows {
            t.row(vec![
                r.simple_root.to_string(),
                r.mark.to_string(),
                r.mu.to_string(),
                r.nu.to_string(),
                r.dim_g_mod_p.to_string(),
                r.e.to_string(),
            ]);
        }
        tables.push(t);
    }
    Ok(Rendered {
        json: serde_json::to_value(&report).expect("reports serialize"),
        tables,
    })
}

pub fn hecke(rs: &RootSystem, lower: &Fractions, upper: &Fractions) -> CmdResult {
    let lo = parahoric::descriptor(rs, &point(rs, "--lower", lower)?)
        .map_err(|e| format!("--lower: {e}"))?;
    let up = parahoric::descriptor(rs, &point(rs, "--upper", upper)?)
        .map_err(|e| format!("--upper: {e}"))?;
    let dim =
        dimension::hecke_fiber_dim(rs, &lo, &up).map_err(|e| format!("--lower/--upper: {e}"))?;
    let summary = Table::kv(
        Some(format!("Hecke fibre in {}", rs.name())),
        vec![
            ("lower", show_q(lo.theta.coords())),
            ("upper", show_q(up.theta.coords())),
            ("fiber_dim", dim.to_string()),
        ],
    );
    Ok(Rendered {
        json: json!({
            "lower": DescriptorRecord::new(rs, &lo),
            "upper": DescriptorRecord::new(rs, &up),
            "fiber_dim": dim,
        }),
        tables: vec![summary],
    })
}

pub fn pardeg(deg: i64, weights: Option<&Fractions>, exponents: Option<&Exponents>) -> CmdResult {
    let line = match exponents {
        Some(ex) => {
            let w = parabolic::invariant_weights(&ex.0).map_err(|e| format!("--exponents: {e}"))?;
            ParabolicLine::new(deg, w)
        }
        None => ParabolicLine::new(deg, weights.map(|w| w.0.clone()).unwrap_or_default()),
    }
    .map_err(|e| format!("--weights: {e}"))?;
    let p = line.pardeg();
    let mut json = serde_json::to_value(&line).expect("lines serialize");
    json["pardeg"] = Value::String(format_fraction(&p));
    let summary = Table::kv(
        Some("parabolic line bundle".to_string()),
        vec![
            ("degree", deg.to_string()),
            ("weights", show_q(&line.weights)),
            ("pardeg", p.to_string()),
        ],
    );
    Ok(Rendered {
        json,
        tables: vec![summary],
    })
}
