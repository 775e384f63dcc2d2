use crate::abelian::{AbMap, FinAbGroup};
use crate::cross::{Base, BaseElem, CrossMorphism, CrossObject, CrossedModule, FiniteGroup, GroupMap, PointedGroupoid, QuadModule};
use crate::error::{Error, Result};
use crate::matrix::{zeros, Int, IntMatrix};
use crate::nil2::{free_abelian, free_nil, hom_from_free, Class2Elem, Class2Group, Class2Hom, FreeWord, PointedSet};
use crate::quadratic;
use crate::tracks::{HopfTrack, TwoMorphism};

use super::lexer::{lex, Tok, Token};
use super::{CrossExtra, Document, HomValue, Value};

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    /// Position just past the end of the input.
    end: (usize, usize),
}

/// A factor `name^e` of a word, with the position of its name.
struct Factor {
    name: String,
    exp: Int,
    line: usize,
    col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Syntax { line, col, msg: msg.into() })
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Newline) => "end of line".into(),
            Some(Tok::Word(w)) => format!("`{}`", w),
            Some(Tok::Quoted(w)) => format!("\"{}\"", w),
            Some(Tok::Punct(c)) => format!("`{}`", c),
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek() == Some(&Tok::Newline) {
            self.pos += 1;
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Word(x)) if x == w)
    }

    fn is_punct(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Punct(c))
    }

    fn keyword(&mut self, w: &str) -> Result<()> {
        if self.is_word(w) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected `{}`, found {}", w, self.describe()))
        }
    }

    fn punct(&mut self, c: char) -> Result<()> {
        if self.is_punct(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected `{}`, found {}", c, self.describe()))
        }
    }

    /// A name with its position.
    fn name(&mut self) -> Result<(String, usize, usize)> {
        let (line, col) = self.here();
        match self.peek().cloned() {
            Some(Tok::Quoted(s)) => {
                self.pos += 1;
                Ok((s, line, col))
            }
            Some(Tok::Word(s)) if super::lexer::is_plain(&s) => {
                self.pos += 1;
                Ok((s, line, col))
            }
            _ => self.error(format!("expected a name, found {}", self.describe())),
        }
    }

    fn is_name(&self) -> bool {
        match self.peek() {
            Some(Tok::Quoted(_)) => true,
            Some(Tok::Word(s)) => super::lexer::is_plain(s),
            _ => false,
        }
    }

    fn int(&mut self) -> Result<Int> {
        if let Some(Tok::Word(s)) = self.peek() {
            if let Ok(v) = s.parse::<Int>() {
                self.pos += 1;
                return Ok(v);
            }
        }
        self.error(format!("expected an integer, found {}", self.describe()))
    }

    fn is_int(&self) -> bool {
        matches!(self.peek(), Some(Tok::Word(s)) if s.parse::<Int>().is_ok())
    }

    fn usize(&mut self) -> Result<usize> {
        let (line, col) = self.here();
        let v = self.int()?;
        usize::try_from(v).map_err(|_| Error::Syntax { line, col, msg: "expected a non-negative count".into() })
    }

    /// Ends a block line: newline or end of input.
    fn end_line(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Newline) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.error(format!("expected end of line, found {}", self.describe())),
        }
    }

    /// `name^e name ...` or `1`, up to `;`, `}` or a line end.
    fn word(&mut self) -> Result<Vec<Factor>> {
        if self.is_word("1") {
            self.pos += 1;
            return Ok(vec![]);
        }
        let mut out = Vec::new();
        while self.is_name() {
            let (name, line, col) = self.name()?;
            let exp = if self.is_punct('^') {
                self.pos += 1;
                if !self.is_int() {
                    return self.error(format!("expected an integer exponent after `^`, found {}", self.describe()));
                }
                self.int()?
            } else {
                Int::from(1)
            };
            out.push(Factor { name, exp, line, col });
        }
        if out.is_empty() {
            return self.error(format!("expected a word, found {}", self.describe()));
        }
        Ok(out)
    }

    /// Statement separator inside braces: `;` and/or line ends.
    fn separator(&mut self) -> Result<()> {
        let start = self.pos;
        loop {
            if self.is_punct(';') || self.peek() == Some(&Tok::Newline) {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start && !self.is_punct('}') {
            return self.error(format!("expected `;`, a line end or `}}`, found {}", self.describe()));
        }
        Ok(())
    }

    /// `{ stmt; stmt ... }`, calling `f` once per statement.
    fn braces(&mut self, f: &mut dyn FnMut(&mut Parser) -> Result<()>) -> Result<()> {
        self.punct('{')?;
        self.skip_newlines();
        while !self.is_punct('}') {
            if self.peek().is_none() {
                return self.error("unterminated `{`");
            }
            f(self)?;
            self.separator()?;
        }
        self.pos += 1;
        Ok(())
    }
}

fn eval_elem(g: &Class2Group, word: &[Factor]) -> Result<Class2Elem> {
    let names = g.gen_names();
    let mut acc = g.identity();
    for f in word {
        let i = names.iter().position(|n| *n == f.name).ok_or_else(|| Error::Syntax {
            line: f.line,
            col: f.col,
            msg: format!("`{}` is not a generator of the group", f.name),
        })?;
        acc = g.mul(&acc, &g.pow(&g.gen(i), &f.exp));
    }
    Ok(acc)
}

fn eval_word(s: &PointedSet, word: &[Factor]) -> Result<FreeWord> {
    let mut letters = Vec::new();
    for f in word {
        let i = s.elems().iter().position(|n| *n == f.name).ok_or_else(|| Error::Syntax {
            line: f.line,
            col: f.col,
            msg: format!("`{}` is not a letter of the free group", f.name),
        })?;
        let e: i64 = i64::try_from(&f.exp).map_err(|_| Error::Syntax { line: f.line, col: f.col, msg: "exponent too large".into() })?;
        let sign = if e < 0 { -1 } else { 1 };
        letters.extend(std::iter::repeat((i, sign)).take(e.unsigned_abs() as usize));
    }
    Ok(FreeWord::new(letters).reduced())
}

fn eval_base(b: &Base, word: &[Factor]) -> Result<BaseElem> {
    match b {
        Base::Nil(g) => Ok(BaseElem::Nil(eval_elem(g, word)?)),
        Base::Free(s) => Ok(BaseElem::Word(eval_word(s, word)?)),
    }
}

fn pointed(names: Vec<String>, line: usize, col: usize) -> Result<PointedSet> {
    PointedSet::from_strings("*".into(), names).map_err(|e| Error::Syntax { line, col, msg: e.to_string() })
}

/// Wraps a semantic failure of a block with the block's position.
fn at<T>(r: Result<T>, line: usize, col: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Syntax { .. } | Error::Dangling { .. } => e,
        other => Error::Syntax { line, col, msg: other.to_string() },
    })
}

struct Ctx {
    doc: Document,
}

impl Ctx {
    fn lookup(&self, name: &str, line: usize, col: usize) -> Result<&Value> {
        self.doc.get(name).ok_or_else(|| Error::Dangling { name: name.into(), line, col })
    }

    fn base(&self, name: &str, line: usize, col: usize) -> Result<Base> {
        match self.lookup(name, line, col)? {
            Value::Group(g) => Ok(Base::Nil(g.clone())),
            Value::FreeGroup(s) => Ok(Base::Free(s.clone())),
            v => Err(Error::Syntax { line, col, msg: format!("`{}` is a {}, not a group", name, v.kind()) }),
        }
    }

    fn group(&self, name: &str, line: usize, col: usize) -> Result<Class2Group> {
        match self.base(name, line, col)? {
            Base::Nil(g) => Ok(g),
            Base::Free(_) => Err(Error::Syntax { line, col, msg: format!("`{}` must be a class-2 group", name) }),
        }
    }

    fn hom(&self, name: &str, line: usize, col: usize) -> Result<HomValue> {
        match self.lookup(name, line, col)? {
            Value::Hom { map, .. } => Ok(map.clone()),
            v => Err(Error::Syntax { line, col, msg: format!("`{}` is a {}, not a hom", name, v.kind()) }),
        }
    }

    fn nil_hom(&self, name: &str, line: usize, col: usize) -> Result<Class2Hom> {
        match self.hom(name, line, col)? {
            HomValue::Nil(h) => Ok(h),
            HomValue::Map(_) => Err(Error::Syntax { line, col, msg: format!("`{}` must be a map of class-2 groups", name) }),
        }
    }

    fn cross(&self, name: &str, line: usize, col: usize) -> Result<CrossObject> {
        match self.lookup(name, line, col)? {
            Value::Cross { object, .. } => Ok(object.clone()),
            v => Err(Error::Syntax { line, col, msg: format!("`{}` is a {}, not a cross object", name, v.kind()) }),
        }
    }

    fn morphism(&self, name: &str, line: usize, col: usize) -> Result<CrossMorphism> {
        match self.lookup(name, line, col)? {
            Value::Morphism { morphism, .. } => Ok(morphism.clone()),
            v => Err(Error::Syntax { line, col, msg: format!("`{}` is a {}, not a morphism", name, v.kind()) }),
        }
    }
}

fn parse_group(p: &mut Parser) -> Result<Value> {
    if p.is_word("ab") {
        p.pos += 1;
        let n = p.usize()?;
        let names = if p.is_word("names") {
            p.pos += 1;
            (0..n).map(|_| p.name().map(|x| x.0)).collect::<Result<Vec<_>>>()?
        } else {
            (0..n).map(|i| format!("g{}", i)).collect()
        };
        let rows = parse_rels(p, n)?;
        return Ok(Value::Group(Class2Group::from_abelian(&FinAbGroup::from_relation_rows(n, rows), names)));
    }
    if p.is_word("free") {
        p.pos += 1;
        p.keyword("basis")?;
        let (line, col) = p.here();
        let mut names = Vec::new();
        while p.is_name() {
            names.push(p.name()?.0);
        }
        return Ok(Value::FreeGroup(pointed(names, line, col)?));
    }
    if !p.is_word("nil2") {
        return p.error(format!("expected `ab`, `nil2` or `free`, found {}", p.describe()));
    }
    let (gl, gc) = p.here();
    p.pos += 1;
    p.keyword("basis")?;
    let (line, col) = p.here();
    let mut qnames = Vec::new();
    while p.is_name() {
        qnames.push(p.name()?.0);
    }
    let mut cnames = Vec::new();
    let mut rows = Vec::new();
    let general = p.is_word("central") || p.is_punct('{');
    if p.is_word("central") {
        p.pos += 1;
        while p.is_name() {
            cnames.push(p.name()?.0);
        }
        rows = parse_rels(p, cnames.len())?;
    }
    if !general {
        return Ok(Value::Group(free_nil(&pointed(qnames, line, col)?)));
    }
    let k = qnames.len();
    let m = cnames.len();
    let central = FinAbGroup::from_relation_rows(m, rows);
    let mut orders = vec![Int::from(0); k];
    let mut powers = vec![zeros(m); k];
    let mut lambda = vec![vec![zeros(m); k]; k];
    // central values are words in the central names
    let cgroup = Class2Group::from_abelian(&central, cnames.clone());
    let outer = |p: &mut Parser| -> Result<usize> {
        let (name, line, col) = p.name()?;
        qnames.iter().position(|q| *q == name).ok_or_else(|| Error::Syntax {
            line,
            col,
            msg: format!("`{}` is not a basis element", name),
        })
    };
    if p.is_punct('{') {
        p.braces(&mut |p| {
            if p.is_word("pow") {
                p.pos += 1;
                let i = outer(p)?;
                orders[i] = p.int()?;
                p.punct('=')?;
                powers[i] = eval_elem(&cgroup, &p.word()?)?.c;
                Ok(())
            } else if p.is_word("comm") {
                p.pos += 1;
                let i = outer(p)?;
                let j = outer(p)?;
                p.punct('=')?;
                let v = eval_elem(&cgroup, &p.word()?)?.c;
                lambda[j][i] = crate::matrix::vec_neg(&v);
                lambda[i][j] = v;
                Ok(())
            } else {
                p.error(format!("expected `pow` or `comm`, found {}", p.describe()))
            }
        })?;
    }
    at(Class2Group::new(qnames, orders, powers, central, cnames, lambda), gl, gc).map(Value::Group)
}

fn parse_rels(p: &mut Parser, n: usize) -> Result<Vec<Vec<Int>>> {
    let mut rows = Vec::new();
    while p.is_word("rel") {
        p.pos += 1;
        rows.push((0..n).map(|_| p.int()).collect::<Result<Vec<_>>>()?);
    }
    Ok(rows)
}

/// `{ gen -> word; ... }` as a list of (generator index, word).
fn parse_images(p: &mut Parser, gens: &[String]) -> Result<Vec<(usize, Vec<Factor>, usize, usize)>> {
    let mut out: Vec<(usize, Vec<Factor>, usize, usize)> = Vec::new();
    p.braces(&mut |p| {
        let (name, line, col) = p.name()?;
        let i = gens.iter().position(|g| *g == name).ok_or_else(|| Error::Syntax {
            line,
            col,
            msg: format!("`{}` is not a generator of the source", name),
        })?;
        if out.iter().any(|(j, ..)| *j == i) {
            return Err(Error::Syntax { line, col, msg: format!("`{}` is assigned twice", name) });
        }
        p.keyword("->")?;
        out.push((i, p.word()?, line, col));
        Ok(())
    })?;
    Ok(out)
}

fn parse_hom(p: &mut Parser, ctx: &Ctx, line: usize, col: usize) -> Result<Value> {
    p.keyword(":")?;
    let (source, sl, sc) = p.name()?;
    let sb = ctx.base(&source, sl, sc)?;
    p.keyword("->")?;
    let (target, tl, tc) = p.name()?;
    let tb = ctx.base(&target, tl, tc)?;
    let gens = sb.gen_names();
    let imgs = parse_images(p, &gens)?;
    let mut values: Vec<Option<BaseElem>> = vec![None; gens.len()];
    for (i, w, ..) in &imgs {
        values[*i] = Some(eval_base(&tb, w)?);
    }
    let map = match (&sb, &tb) {
        (Base::Nil(s), Base::Nil(t)) => {
            let nil = |v: &Option<BaseElem>| v.as_ref().map(|b| b.as_nil().cloned().expect("class-2 element"));
            if values.iter().all(|v| v.is_some()) {
                HomValue::Nil(at(Class2Hom::new(s.clone(), t.clone(), values.iter().map(|v| nil(v).unwrap()).collect()), line, col)?)
            } else if values[..s.k()].iter().all(|v| v.is_some())
                && values[s.k()..].iter().all(|v| v.is_none())
                && PointedSet::from_strings("*".into(), s.qnames().to_vec()).map(|a| free_nil(&a) == *s).unwrap_or(false)
            {
                // letters of a free nil-group determine the map
                let letters = values[..s.k()].iter().map(|v| nil(v).unwrap()).collect();
                HomValue::Nil(at(hom_from_free(s, t, letters), line, col)?)
            } else {
                let missing = gens.iter().zip(&values).find(|(_, v)| v.is_none()).map(|(g, _)| g.clone()).unwrap_or_default();
                return Err(Error::Syntax { line, col, msg: format!("no image given for `{}`", missing) });
            }
        }
        _ => {
            if let Some((g, _)) = gens.iter().zip(&values).find(|(_, v)| v.is_none()) {
                return Err(Error::Syntax { line, col, msg: format!("no image given for `{}`", g) });
            }
            HomValue::Map(at(GroupMap::new(sb.clone(), tb.clone(), values.into_iter().map(|v| v.unwrap()).collect()), line, col)?)
        }
    };
    Ok(Value::Hom { source, target, map })
}

fn parse_level(p: &mut Parser) -> Result<u32> {
    p.keyword("n")?;
    p.punct('=')?;
    let (line, col) = p.here();
    let v = p.int()?;
    u32::try_from(v).map_err(|_| Error::Syntax { line, col, msg: "level out of range".into() })
}

fn parse_cross(p: &mut Parser, ctx: &Ctx, line: usize, col: usize) -> Result<Value> {
    let level = parse_level(p)?;
    let mut fields: Vec<(String, Vec<(String, usize, usize)>)> = Vec::new();
    p.braces(&mut |p| {
        let (key, kl, kc) = p.name()?;
        if !["M", "N", "del", "omega", "act"].contains(&key.as_str()) {
            return Err(Error::Syntax { line: kl, col: kc, msg: format!("unknown field `{}`", key) });
        }
        p.punct('=')?;
        let mut vals = Vec::new();
        if key == "act" && p.is_word("trivial") {
            let (l, c) = p.here();
            p.pos += 1;
            vals.push(("trivial".to_string(), l, c));
        } else {
            vals.push(p.name()?);
            while key == "act" && p.is_name() {
                vals.push(p.name()?);
            }
        }
        fields.push((key, vals));
        Ok(())
    })?;
    let field = |k: &str| -> Result<(String, usize, usize)> {
        fields
            .iter()
            .find(|(key, _)| key == k)
            .map(|(_, v)| v[0].clone())
            .ok_or_else(|| Error::Syntax { line, col, msg: format!("missing field `{}`", k) })
    };
    let (m, ml, mc) = field("M")?;
    let (n, nl, nc) = field("N")?;
    let (del, dl, dc) = field("del")?;
    let mg = ctx.group(&m, ml, mc)?;
    let nb = ctx.base(&n, nl, nc)?;
    let delh = ctx.hom(&del, dl, dc)?;
    if level >= 2 {
        let (w, wl, wc) = field("omega")?;
        let omega = ctx.nil_hom(&w, wl, wc)?;
        let Base::Nil(ng) = nb else {
            return Err(Error::Syntax { line: nl, col: nc, msg: "quadratic modules need a class-2 base".into() });
        };
        let HomValue::Nil(d) = delh else {
            return Err(Error::Syntax { line: dl, col: dc, msg: "del must be a map of class-2 groups".into() });
        };
        let q = at(QuadModule::new(level, mg, ng, d, omega.images().to_vec()), line, col)?;
        return Ok(Value::Cross { m, n, del, extra: CrossExtra::Omega(w), object: CrossObject::Quadratic(q) });
    }
    if level != 1 {
        return Err(Error::Syntax { line, col, msg: "levels 1 and above are written as cross blocks".into() });
    }
    let acts = fields.iter().find(|(k, _)| k == "act").map(|(_, v)| v.clone()).unwrap_or_default();
    let (extra, c) = if acts.is_empty() || (acts.len() == 1 && acts[0].0 == "trivial") {
        (CrossExtra::TrivialAction, at(CrossedModule::trivial_action(mg, nb, delh.as_group_map()), line, col)?)
    } else {
        let homs = acts.iter().map(|(a, l, c)| ctx.nil_hom(a, *l, *c)).collect::<Result<Vec<_>>>()?;
        let c = at(CrossedModule::new(mg, nb, delh.as_group_map(), homs), line, col)?;
        (CrossExtra::Act(acts.into_iter().map(|a| a.0).collect()), c)
    };
    Ok(Value::Cross { m, n, del, extra, object: CrossObject::Crossed(c) })
}

fn parse_morphism(p: &mut Parser, ctx: &Ctx, line: usize, col: usize) -> Result<Value> {
    p.keyword(":")?;
    let (source, sl, sc) = p.name()?;
    let x = ctx.cross(&source, sl, sc)?;
    p.keyword("->")?;
    let (target, tl, tc) = p.name()?;
    let y = ctx.cross(&target, tl, tc)?;
    let mut f1 = None;
    let mut f0 = None;
    p.braces(&mut |p| {
        let (key, kl, kc) = p.name()?;
        p.punct('=')?;
        let v = p.name()?;
        match key.as_str() {
            "f1" => f1 = Some(v),
            "f0" => f0 = Some(v),
            _ => return Err(Error::Syntax { line: kl, col: kc, msg: format!("unknown field `{}`", key) }),
        }
        Ok(())
    })?;
    let missing = |k: &str| Error::Syntax { line, col, msg: format!("missing field `{}`", k) };
    let (f1, l1, c1) = f1.ok_or_else(|| missing("f1"))?;
    let (f0, l0, c0) = f0.ok_or_else(|| missing("f0"))?;
    let h1 = ctx.nil_hom(&f1, l1, c1)?;
    let h0 = ctx.hom(&f0, l0, c0)?;
    let morphism = match (x, y) {
        (CrossObject::Quadratic(a), CrossObject::Quadratic(b)) => {
            let HomValue::Nil(h0) = h0 else {
                return Err(Error::Syntax { line: l0, col: c0, msg: "f0 must be a map of class-2 groups".into() });
            };
            at(CrossMorphism::quadratic(a, b, h1, h0), line, col)?
        }
        (CrossObject::Crossed(a), CrossObject::Crossed(b)) => at(CrossMorphism::crossed(a, b, h1, h0.as_group_map()), line, col)?,
        _ => return Err(Error::Syntax { line, col, msg: "morphism between objects of different kinds".into() }),
    };
    Ok(Value::Morphism { source, target, f1, f0, morphism })
}

fn parse_matrix(p: &mut Parser) -> Result<Vec<Vec<Int>>> {
    p.punct('[')?;
    let mut rows = Vec::new();
    while p.is_punct('[') {
        p.pos += 1;
        let mut row = Vec::new();
        while !p.is_punct(']') {
            row.push(p.int()?);
        }
        p.pos += 1;
        rows.push(row);
    }
    p.punct(']')?;
    Ok(rows)
}

fn free_letters(g: &Class2Group, line: usize, col: usize) -> Result<PointedSet> {
    let s = pointed(g.qnames().to_vec(), line, col)?;
    if free_nil(&s) != *g {
        return Err(Error::Syntax { line, col, msg: "tracks live between free nil-groups".into() });
    }
    Ok(s)
}

fn parse_track(p: &mut Parser, ctx: &Ctx, line: usize, col: usize) -> Result<Value> {
    let n = parse_level(p)?;
    let (source, sl, sc) = p.name()?;
    let f = ctx.nil_hom(&source, sl, sc)?;
    p.keyword("=>")?;
    let (target, tl, tc) = p.name()?;
    let g = ctx.nil_hom(&target, tl, tc)?;
    p.keyword("alpha")?;
    let (ml, mc) = p.here();
    let rows = parse_matrix(p)?;
    let a = free_letters(&f.source, sl, sc)?;
    let b = free_letters(&f.target, sl, sc)?;
    let t = at(quadratic::tensor_square_n(n, &free_abelian(&b)), line, col)?;
    if rows.len() != t.ngens() || rows.iter().any(|r| r.len() != a.len()) {
        return Err(Error::Syntax {
            line: ml,
            col: mc,
            msg: format!("alpha must be a {} x {} matrix", t.ngens(), a.len()),
        });
    }
    let alpha = at(AbMap::new(free_abelian(&a), t, IntMatrix::from_rows(a.len(), rows)), ml, mc)?;
    let track = at(HopfTrack::new(n, &a, &b, f, g, alpha), line, col)?;
    Ok(Value::Track { source, target, track })
}

fn parse_two(p: &mut Parser, ctx: &Ctx, line: usize, col: usize) -> Result<Value> {
    p.keyword(":")?;
    let (source, sl, sc) = p.name()?;
    let f = ctx.morphism(&source, sl, sc)?;
    p.keyword("=>")?;
    let (target, tl, tc) = p.name()?;
    let g = ctx.morphism(&target, tl, tc)?;
    let base = at(f.source().base(), line, col)?;
    let top = at(f.target().top().cloned(), line, col)?;
    let gens = base.gen_names();
    let imgs = parse_images(p, &gens)?;
    let mut values: Vec<Option<Class2Elem>> = vec![None; gens.len()];
    for (i, w, ..) in &imgs {
        values[*i] = Some(eval_elem(&top, w)?);
    }
    let letters_only = match &base {
        Base::Nil(b) => values[..b.k()].iter().all(|v| v.is_some()) && values[b.k()..].iter().all(|v| v.is_none()),
        Base::Free(_) => false,
    };
    let values = if values.iter().all(|v| v.is_some()) {
        values.into_iter().map(|v| v.unwrap()).collect()
    } else if letters_only {
        let k = base.as_nil().map(|b| b.k()).unwrap_or(0);
        at(TwoMorphism::letter_values(&f, values[..k].iter().map(|v| v.clone().unwrap()).collect()), line, col)?
    } else {
        return Err(Error::Syntax { line, col, msg: "values must be given on every generator or on every letter".into() });
    };
    let two = at(TwoMorphism::new(f, g, values), line, col)?;
    Ok(Value::TwoMorphism { source, target, two })
}

fn parse_groupoid(p: &mut Parser, ctx: &Ctx, line: usize, col: usize) -> Result<Value> {
    p.keyword("objects")?;
    let (ol, oc) = p.here();
    let mut names = Vec::new();
    while p.is_name() {
        names.push(p.name()?.0);
    }
    let objects = pointed(names, ol, oc)?;
    let mut components: Vec<(Vec<usize>, Option<String>)> = Vec::new();
    let mut groups = Vec::new();
    p.braces(&mut |p| {
        p.keyword("component")?;
        let mut objs = Vec::new();
        loop {
            let (l, c) = p.here();
            if p.is_word("*") {
                p.pos += 1;
                objs.push(0);
            } else if p.is_name() {
                let (o, _, _) = p.name()?;
                let i = objects.elems().iter().position(|x| *x == o).ok_or_else(|| Error::Syntax {
                    line: l,
                    col: c,
                    msg: format!("`{}` is not an object", o),
                })?;
                objs.push(i + 1);
            } else {
                break;
            }
        }
        if objs.is_empty() {
            return p.error("a component needs at least one object");
        }
        let aut = if p.is_word("aut") {
            p.pos += 1;
            p.punct('=')?;
            let (g, l, c) = p.name()?;
            groups.push(FiniteGroup::from_class2(&ctx.group(&g, l, c)?).map_err(|e| Error::Syntax { line: l, col: c, msg: e.to_string() })?);
            Some(g)
        } else {
            groups.push(FiniteGroup::trivial());
            None
        };
        components.push((objs, aut));
        Ok(())
    })?;
    let comps: Vec<(Vec<usize>, FiniteGroup)> = components.iter().map(|c| c.0.clone()).zip(groups).collect();
    let groupoid = at(PointedGroupoid::from_components(objects.clone(), &comps), line, col)?;
    Ok(Value::Groupoid { objects, components, groupoid })
}

/// Parses a document; names must be defined before they are used.
pub fn parse(text: &str) -> Result<Document> {
    let toks = lex(text)?;
    let lines = text.split('\n').count();
    let last = text.split('\n').last().map(|l| l.chars().count()).unwrap_or(0);
    let mut p = Parser { toks, pos: 0, end: (lines, last + 1) };
    let mut ctx = Ctx { doc: Document::new() };
    loop {
        p.skip_newlines();
        if p.peek().is_none() {
            break;
        }
        let (line, col) = p.here();
        let kind = match p.peek() {
            Some(Tok::Word(w)) => w.clone(),
            _ => return p.error(format!("expected a block keyword, found {}", p.describe())),
        };
        p.pos += 1;
        let (name, nl, nc) = p.name()?;
        let value = match kind.as_str() {
            "group" => {
                p.punct('=')?;
                parse_group(&mut p)?
            }
            "hom" => parse_hom(&mut p, &ctx, line, col)?,
            "cross" => parse_cross(&mut p, &ctx, line, col)?,
            "morphism" => parse_morphism(&mut p, &ctx, line, col)?,
            "track" => parse_track(&mut p, &ctx, line, col)?,
            "twomorphism" => parse_two(&mut p, &ctx, line, col)?,
            "groupoid" => parse_groupoid(&mut p, &ctx, line, col)?,
            other => {
                return Err(Error::Syntax {
                    line,
                    col,
                    msg: format!(
                        "unknown block `{}`; expected group, hom, cross, morphism, track, twomorphism or groupoid",
                        other
                    ),
                })
            }
        };
        p.end_line()?;
        if ctx.doc.get(&name).is_some() {
            return Err(Error::Syntax { line: nl, col: nc, msg: format!("`{}` is defined twice", name) });
        }
        ctx.doc.push(&name, value)?;
    }
    Ok(ctx.doc)
}
