//! Braid words, plat-closure metadata and the oriented plat diagram.
//!
//! Letters are read left to right, which is bottom to top of the braid.
//! `s_i` crosses the strand at position `i` over the strand at `i + 1`;
//! with both strands pointing up this is a positive (right-handed) crossing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qtensor::{QContext, Spin};

/// One elementary crossing `s_index^sign`, with `index` counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: i8,
}

impl Letter {
    pub fn new(index: usize, sign: i8) -> Self {
        Letter { index, sign: if sign < 0 { -1 } else { 1 } }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: -self.sign }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        check_strands(strands)?;
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::GeneratorOutOfRange { index: l.index, max: strands - 1 });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses `token*` with `token := 's' INT ('^' SIGNEDINT)?`.
    ///
    /// `s2^-3` expands to three copies of `s2^-1`; an exponent of zero
    /// contributes nothing.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        check_strands(strands)?;
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        let digits = |mut j: usize| {
            let start = j;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            (start, j)
        };
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if bytes[i] != b's' {
                return Err(Error::Syntax { pos: i, msg: format!("expected `s`, found `{}`", bytes[i] as char) });
            }
            let (ds, de) = digits(i + 1);
            if ds == de {
                return Err(Error::Syntax { pos: ds, msg: "expected generator index".into() });
            }
            let index: usize =
                text[ds..de].parse().map_err(|_| Error::Syntax { pos: ds, msg: "generator index too large".into() })?;
            i = de;
            let mut exponent: i64 = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let signed = i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+');
                let neg = signed && bytes[i] == b'-';
                if signed {
                    i += 1;
                }
                let (es, ee) = digits(i);
                if es == ee {
                    return Err(Error::Syntax { pos: es, msg: "expected exponent".into() });
                }
                let magnitude: i64 =
                    text[es..ee].parse().map_err(|_| Error::Syntax { pos: es, msg: "exponent too large".into() })?;
                exponent = if neg { -magnitude } else { magnitude };
                i = ee;
            }
            if i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                return Err(Error::Syntax { pos: i, msg: "expected whitespace between letters".into() });
            }
            if index == 0 || index >= strands {
                return Err(Error::GeneratorOutOfRange { index, max: strands - 1 });
            }
            let sign = if exponent < 0 { -1 } else { 1 };
            letters.extend(std::iter::repeat_n(Letter::new(index, sign), exponent.unsigned_abs() as usize));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.letters.len()
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Flips every exponent.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| l.inverse()).collect() }
    }

    /// Group inverse: reversed and mirrored.
    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Spec(format!("cannot join words on {} and {} strands", self.strands, other.strands)));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `perm[p]` is the top position reached by the strand starting at bottom position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut perm = vec![0; self.strands];
        for (top, &strand) in at.iter().enumerate() {
            perm[strand] = top;
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn check_strands(strands: usize) -> Result<()> {
    if strands < 2 || !strands.is_multiple_of(2) {
        Err(Error::OddStrands(strands))
    } else {
        Ok(())
    }
}

/// Plat-closure metadata: one color per cap pair, optional orientation override.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlatSpec {
    pub strands: usize,
    pub colors: Vec<Spin>,
    pub orientations: Option<Vec<i8>>,
    pub level: u32,
    pub word: String,
}

#[derive(Serialize, Deserialize)]
struct PlatSpecJson {
    strands: usize,
    colors: Vec<Spin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orientations: Option<String>,
    level: u32,
    #[serde(default)]
    word: String,
}

impl PlatSpec {
    /// Validates strand count, color count and color range.
    pub fn new(
        strands: usize,
        colors: Vec<Spin>,
        orientations: Option<Vec<i8>>,
        level: u32,
        word: &str,
    ) -> Result<Self> {
        check_strands(strands)?;
        if colors.len() != strands / 2 {
            return Err(Error::Spec(format!("{} strands need {} colors, got {}", strands, strands / 2, colors.len())));
        }
        if let Some(o) = &orientations {
            if o.len() != strands {
                return Err(Error::Orientation(format!("pattern has {} entries for {} strands", o.len(), strands)));
            }
        }
        let ctx = QContext::new(level)?;
        for &c in &colors {
            ctx.check_spin(c)?;
        }
        Ok(PlatSpec { strands, colors, orientations, level, word: word.to_string() })
    }

    /// Uniform color on every cap.
    pub fn uniform(strands: usize, color: Spin, level: u32, word: &str) -> Result<Self> {
        Self::new(strands, vec![color; strands / 2], None, level, word)
    }

    pub fn caps(&self) -> usize {
        self.strands / 2
    }

    pub fn braid_word(&self) -> Result<BraidWord> {
        BraidWord::parse(&self.word, self.strands)
    }

    /// Color carried by each strand, indexed by bottom position.
    pub fn strand_colors(&self) -> Vec<Spin> {
        self.colors.iter().flat_map(|&c| [c, c]).collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PlatSpecJson = serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))?;
        let orientations = raw.orientations.as_deref().map(parse_orientations).transpose()?;
        Self::new(raw.strands, raw.colors, orientations, raw.level, &raw.word)
    }

    pub fn to_json(&self) -> String {
        let raw = PlatSpecJson {
            strands: self.strands,
            colors: self.colors.clone(),
            orientations: self.orientations.as_ref().map(|o| format_orientations(o)),
            level: self.level,
            word: self.word.clone(),
        };
        serde_json::to_string(&raw).expect("plat spec serializes")
    }
}

/// Parses a `+`/`-` string into `±1` entries.
pub fn parse_orientations(text: &str) -> Result<Vec<i8>> {
    text.chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(Error::Syntax { pos: i, msg: format!("orientation must be `+` or `-`, found `{c}`") }),
        })
        .collect()
}

pub fn format_orientations(o: &[i8]) -> String {
    o.iter().map(|&e| if e > 0 { '+' } else { '-' }).collect()
}

/// Default pattern `+ - - +` repeated.
pub fn default_pattern(strands: usize) -> Vec<i8> {
    (0..strands).map(|p| if p % 4 == 0 || p % 4 == 3 { 1 } else { -1 }).collect()
}

/// Per-strand orientations (indexed by bottom position) for the plat closure of `word`.
///
/// A supplied pattern must put opposite orientations on both ends of every
/// bottom and top cap. Without one, each component takes its orientation
/// from the default pattern at its leftmost bottom strand.
pub fn plat_orientations(spec: &PlatSpec, word: &BraidWord) -> Result<Vec<i8>> {
    let n = spec.strands;
    let perm = word.permutation();
    let mut at_top = vec![0; n];
    for (strand, &top) in perm.iter().enumerate() {
        at_top[top] = strand;
    }
    if let Some(pattern) = &spec.orientations {
        for l in 0..n / 2 {
            if pattern[2 * l] == pattern[2 * l + 1] {
                return Err(Error::Orientation(format!("bottom cap {} joins equal orientations", l + 1)));
            }
            if pattern[at_top[2 * l]] == pattern[at_top[2 * l + 1]] {
                return Err(Error::Orientation(format!("top cap {} joins equal orientations", l + 1)));
            }
        }
        return Ok(pattern.clone());
    }
    let default = default_pattern(n);
    let mut eps = vec![0i8; n];
    for start in 0..n {
        if eps[start] != 0 {
            continue;
        }
        let mut strand = start;
        let value = default[start];
        loop {
            eps[strand] = value;
            let partner = strand ^ 1;
            eps[partner] = -value;
            let top = perm[partner];
            let next = at_top[top ^ 1];
            if eps[next] != 0 {
                break;
            }
            strand = next;
        }
    }
    Ok(eps)
}

/// One crossing of the plat diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Position of the letter in the word (the row between heights `row` and `row + 1`).
    pub row: usize,
    /// Left position of the crossing, counted from 0.
    pub position: usize,
    /// Exponent of the letter.
    pub exponent: i8,
    /// Bottom-position labels of the strands entering from the left and right.
    pub left_strand: usize,
    pub right_strand: usize,
    /// Oriented crossing sign.
    pub sign: i8,
}

/// Oriented plat closure of a braid word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    pub strands: usize,
    pub crossings: Vec<Crossing>,
    pub orientations: Vec<i8>,
    pub permutation: Vec<usize>,
    pub components: usize,
    /// Component index of each strand.
    pub component_of: Vec<usize>,
}

impl LinkDiagram {
    pub fn build(spec: &PlatSpec, word: &BraidWord) -> Result<Self> {
        if word.strands() != spec.strands {
            return Err(Error::Spec(format!("word has {} strands, spec has {}", word.strands(), spec.strands)));
        }
        let orientations = plat_orientations(spec, word)?;
        let n = spec.strands;
        let mut at: Vec<usize> = (0..n).collect();
        let mut crossings = Vec::with_capacity(word.len());
        for (row, l) in word.letters().iter().enumerate() {
            let p = l.index - 1;
            let (a, b) = (at[p], at[p + 1]);
            crossings.push(Crossing {
                row,
                position: p,
                exponent: l.sign,
                left_strand: a,
                right_strand: b,
                sign: l.sign * orientations[a] * orientations[b],
            });
            at.swap(p, p + 1);
        }
        let permutation = word.permutation();
        let (components, component_of) = components(&permutation);
        Ok(LinkDiagram { strands: n, crossings, orientations, permutation, components, component_of })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }
}

fn components(perm: &[usize]) -> (usize, Vec<usize>) {
    let n = perm.len();
    let mut at_top = vec![0; n];
    for (s, &t) in perm.iter().enumerate() {
        at_top[t] = s;
    }
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut s = start;
        while comp[s] == usize::MAX {
            comp[s] = count;
            comp[s ^ 1] = count;
            s = at_top[perm[s ^ 1] ^ 1];
        }
        count += 1;
    }
    (count, comp)
}
