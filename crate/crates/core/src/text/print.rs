use std::fmt::Write;

use crate::cross::{Base, BaseElem};
use crate::matrix::Int;
use crate::nil2::{free_nil, Class2Elem, Class2Group, FreeWord, PointedSet};
use num_traits::{One, Zero};

use super::lexer::quote;
use super::{CrossExtra, Document, HomValue, Value};

fn power(name: &str, e: &Int) -> String {
    if e.is_one() {
        quote(name)
    } else {
        format!("{}^{}", quote(name), e)
    }
}

/// Normal form `x_1^{q_1} ... x_k^{q_k} z_1^{c_1} ...`, or `1`.
pub fn show_elem(g: &Class2Group, x: &Class2Elem) -> String {
    let mut parts = Vec::new();
    for (name, e) in g.qnames().iter().zip(&x.q) {
        if !e.is_zero() {
            parts.push(power(name, e));
        }
    }
    for (name, e) in g.cnames().iter().zip(&x.c) {
        if !e.is_zero() {
            parts.push(power(name, e));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn show_word(s: &PointedSet, w: &FreeWord) -> String {
    let w = w.reduced();
    if w.letters.is_empty() {
        return "1".into();
    }
    // runs of one letter collapse to powers
    let mut parts: Vec<(usize, i64)> = Vec::new();
    for &(i, e) in &w.letters {
        match parts.last_mut() {
            Some((j, f)) if *j == i => *f += e as i64,
            _ => parts.push((i, e as i64)),
        }
    }
    parts.iter().map(|&(i, e)| power(&s.elems()[i], &Int::from(e))).collect::<Vec<_>>().join(" ")
}

fn show_base_elem(b: &Base, x: &BaseElem) -> String {
    match (b, x) {
        (Base::Nil(g), BaseElem::Nil(e)) => show_elem(g, e),
        (Base::Free(s), BaseElem::Word(w)) => show_word(s, w),
        _ => "?".into(),
    }
}

fn names(xs: &[String]) -> String {
    xs.iter().map(|x| quote(x)).collect::<Vec<_>>().join(" ")
}

fn ints(xs: &[Int]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn is_free_nil(g: &Class2Group) -> bool {
    match PointedSet::from_strings("*".into(), g.qnames().to_vec()) {
        Ok(s) => free_nil(&s) == *g,
        Err(_) => false,
    }
}

fn print_group(out: &mut String, name: &str, g: &Class2Group) {
    let c = g.central();
    let rels: String = c.relations().row_vecs().iter().map(|r| format!(" rel {}", ints(r))).collect();
    if g.k() == 0 {
        let nm = if g.m() == 0 { String::new() } else { format!(" names {}", names(g.cnames())) };
        let _ = writeln!(out, "group {} = ab {}{}{}", quote(name), g.m(), nm, rels);
        return;
    }
    if is_free_nil(g) {
        let _ = writeln!(out, "group {} = nil2 basis {}", quote(name), names(g.qnames()));
        return;
    }
    let mut head = format!("group {} = nil2 basis {}", quote(name), names(g.qnames()));
    if g.m() > 0 {
        let _ = write!(head, " central {}{}", names(g.cnames()), rels);
    }
    let mut stmts = Vec::new();
    let central_elem = |v: &[Int]| show_elem(g, &Class2Elem { q: vec![Int::zero(); g.k()], c: v.to_vec() });
    for i in 0..g.k() {
        if !g.orders()[i].is_zero() {
            stmts.push(format!("pow {} {} = {}", quote(&g.qnames()[i]), g.orders()[i], central_elem(g.power(i))));
        }
    }
    for i in 0..g.k() {
        for j in i + 1..g.k() {
            let l = g.lambda(i, j);
            if !c.is_zero(l) {
                stmts.push(format!("comm {} {} = {}", quote(&g.qnames()[i]), quote(&g.qnames()[j]), central_elem(l)));
            }
        }
    }
    if stmts.is_empty() {
        let _ = writeln!(out, "{} {{}}", head);
    } else {
        let _ = writeln!(out, "{} {{", head);
        for s in stmts {
            let _ = writeln!(out, "  {}", s);
        }
        let _ = writeln!(out, "}}");
    }
}

fn print_images(out: &mut String, head: String, lines: Vec<String>) {
    if lines.is_empty() {
        let _ = writeln!(out, "{} {{}}", head);
    } else {
        let _ = writeln!(out, "{} {{", head);
        for l in lines {
            let _ = writeln!(out, "  {}", l);
        }
        let _ = writeln!(out, "}}");
    }
}

fn print_hom(out: &mut String, name: &str, source: &str, target: &str, map: &HomValue) {
    let head = format!("hom {} : {} -> {}", quote(name), quote(source), quote(target));
    let lines = match map {
        HomValue::Nil(h) => {
            let names = h.source.gen_names();
            names.iter().zip(h.images()).map(|(n, x)| format!("{} -> {}", quote(n), show_elem(&h.target, x))).collect()
        }
        HomValue::Map(m) => {
            let names = m.source.gen_names();
            names.iter().zip(m.images()).map(|(n, x)| format!("{} -> {}", quote(n), show_base_elem(&m.target, x))).collect()
        }
    };
    print_images(out, head, lines);
}

fn print_value(out: &mut String, name: &str, v: &Value) {
    match v {
        Value::Group(g) => print_group(out, name, g),
        Value::FreeGroup(s) => {
            let _ = writeln!(out, "group {} = free basis {}", quote(name), names(s.elems()));
        }
        Value::Hom { source, target, map } => print_hom(out, name, source, target, map),
        Value::Cross { m, n, del, extra, object } => {
            let extra = match extra {
                CrossExtra::Omega(w) => format!("; omega={}", quote(w)),
                CrossExtra::Act(a) => format!("; act={}", names(a)),
                CrossExtra::TrivialAction => "; act=trivial".into(),
            };
            let _ = writeln!(
                out,
                "cross {} n={} {{ M={}; N={}; del={}{} }}",
                quote(name),
                object.level(),
                quote(m),
                quote(n),
                quote(del),
                extra
            );
        }
        Value::Morphism { source, target, f1, f0, .. } => {
            let _ = writeln!(
                out,
                "morphism {} : {} -> {} {{ f1={}; f0={} }}",
                quote(name),
                quote(source),
                quote(target),
                quote(f1),
                quote(f0)
            );
        }
        Value::Track { source, target, track } => {
            let rows: Vec<String> = track.alpha.matrix.row_vecs().iter().map(|r| format!("[{}]", ints(r))).collect();
            let _ = writeln!(
                out,
                "track {} n={} {} => {} alpha [{}]",
                quote(name),
                track.n,
                quote(source),
                quote(target),
                rows.join(" ")
            );
        }
        Value::TwoMorphism { source, target, two } => {
            let head = format!("twomorphism {} : {} => {}", quote(name), quote(source), quote(target));
            let x = two.source.source();
            let top = two.source.target().top().cloned().unwrap_or_else(|_| Class2Group::trivial());
            let gens = x.base().map(|b| b.gen_names()).unwrap_or_default();
            let lines = gens.iter().zip(two.values()).map(|(n, v)| format!("{} -> {}", quote(n), show_elem(&top, v))).collect();
            print_images(out, head, lines);
        }
        Value::Groupoid { objects, components, .. } => {
            let obj_name = |i: usize| if i == 0 { "*".to_string() } else { quote(&objects.elems()[i - 1]) };
            let head = format!(
                "groupoid {} objects{}",
                quote(name),
                objects.elems().iter().map(|o| format!(" {}", quote(o))).collect::<String>()
            );
            let lines = components
                .iter()
                .map(|(objs, aut)| {
                    let o: Vec<String> = objs.iter().map(|&i| obj_name(i)).collect();
                    match aut {
                        Some(a) => format!("component {} aut={}", o.join(" "), quote(a)),
                        None => format!("component {}", o.join(" ")),
                    }
                })
                .collect();
            print_images(out, head, lines);
        }
    }
}

/// Canonical text: one block per item in definition order, fixed generator order, row-major matrices.
pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    for (name, v) in doc.items() {
        print_value(&mut out, name, v);
    }
    out
}
