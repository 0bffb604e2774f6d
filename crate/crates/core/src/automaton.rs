//! The measure-once automaton that reads a braid word on the singlet space of
//! a plat closure and returns the amplitude of ending in the multi-singlet.

use num_complex::Complex64;
use serde::Serialize;

use crate::braid::{plat_orientations, BraidWord, LinkDiagram, PlatSpec};
use crate::error::{Error, Result};
use crate::fusion::{apply_generator, change_basis, Decoration, FusionTree, Shape, StateVector};
use crate::qtensor::{QContext, Spin};

/// `c(N) = (2N - 1) ln(2N - 1) + 1`, the per-crossing move allowance.
pub fn bound_constant(caps: usize) -> f64 {
    let m = (2 * caps - 1) as f64;
    m * m.ln() + 1.0
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub re: f64,
    pub im: f64,
    pub probability: f64,
    /// Braid letters plus F-moves.
    pub moves: usize,
    pub f_moves: usize,
    #[serde(rename = "wordLength")]
    pub word_length: usize,
    #[serde(rename = "boundConstant")]
    pub bound_constant: f64,
    pub bound: f64,
    pub writhe: i64,
}

impl RunReport {
    pub fn amplitude(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Debug)]
pub struct Automaton {
    ctx: QContext,
    spec: PlatSpec,
    color: Spin,
    acceptor: Option<Vec<usize>>,
}

impl Automaton {
    /// Builds the automaton for a plat specification.
    ///
    /// Every cap must carry the same color, so that the multi-singlet is a
    /// legal initial and final configuration for any braid.
    pub fn new(spec: &PlatSpec) -> Result<Self> {
        let ctx = QContext::new(spec.level)?;
        let color = spec.colors[0];
        for &c in &spec.colors {
            ctx.check_spin(c)?;
        }
        if spec.colors.iter().any(|&c| c != color) {
            let list: Vec<String> = spec.colors.iter().map(|c| c.to_string()).collect();
            return Err(Error::ColorMismatch(format!("caps carry unequal colors ({})", list.join(", "))));
        }
        Ok(Automaton { ctx, spec: spec.clone(), color, acceptor: None })
    }

    /// Accept the multi-singlet whose point decorations are the initial ones
    /// permuted by `perm` (point `p` carries the initial decoration of `perm[p]`).
    pub fn with_acceptor(mut self, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; self.spec.strands];
        if perm.len() != self.spec.strands
            || perm.iter().any(|&p| p >= seen.len() || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Spec(format!("acceptor must permute {} points", self.spec.strands)));
        }
        self.acceptor = Some(perm);
        Ok(self)
    }

    pub fn context(&self) -> &QContext {
        &self.ctx
    }

    pub fn spec(&self) -> &PlatSpec {
        &self.spec
    }

    pub fn caps(&self) -> usize {
        self.spec.caps()
    }

    fn decorations(&self, orientations: &[i8]) -> Vec<Decoration> {
        orientations.iter().map(|&o| Decoration { color: self.color, orientation: o }).collect()
    }

    /// Pre-order labels of the multi-singlet on the odd tree.
    fn singlet_labels(&self) -> Vec<Spin> {
        let shape = Shape::odd(self.caps());
        let root = shape.span();
        shape.internal_spans().iter().map(|&s| if s == root { self.color } else { Spin::ZERO }).collect()
    }

    /// The initial configuration for a given word (orientations depend on the closure).
    pub fn initial_state(&self, word: &BraidWord) -> Result<StateVector> {
        let orientations = plat_orientations(&self.spec, word)?;
        let tree = FusionTree::new(Shape::odd(self.caps()), self.decorations(&orientations))?;
        StateVector::basis_state(tree, &self.singlet_labels(), &self.ctx)
    }

    /// Final state vector after reading `word`, on the odd tree, plus the F-move count.
    pub fn evolve(&self, word: &BraidWord) -> Result<(StateVector, usize)> {
        if word.strands() != self.spec.strands {
            return Err(Error::Spec(format!(
                "word has {} strands, automaton has {}",
                word.strands(),
                self.spec.strands
            )));
        }
        let mut v = self.initial_state(word)?;
        let mut f_moves = 0;
        for l in word.letters() {
            let (w, m) = apply_generator(&v, l.index, l.sign, &self.ctx)?;
            v = w;
            f_moves += m;
        }
        let (v, m) = change_basis(&v, &Shape::odd(self.caps()), &self.ctx)?;
        Ok((v, f_moves + m))
    }

    /// `<accept| U_word |initial>` with the move ledger.
    pub fn run(&self, word: &BraidWord) -> Result<RunReport> {
        let (v, f_moves) = self.evolve(word)?;
        let initial = self.initial_state(word)?;
        let accepted = match &self.acceptor {
            None => true,
            Some(perm) => perm.iter().enumerate().all(|(p, &src)| v.tree.leaves[p] == initial.tree.leaves[src]),
        };
        let amplitude = match v.index_of(&self.singlet_labels()) {
            Some(idx) if accepted => v.amplitudes[idx],
            _ => Complex64::new(0.0, 0.0),
        };
        let c = bound_constant(self.caps());
        let writhe = LinkDiagram::build(&self.spec, word)?.writhe();
        Ok(RunReport {
            re: amplitude.re,
            im: amplitude.im,
            probability: amplitude.norm_sqr(),
            moves: word.len() + f_moves,
            f_moves,
            word_length: word.len(),
            bound_constant: c,
            bound: c * word.len() as f64,
            writhe,
        })
    }

    pub fn acceptance_probability(&self, word: &BraidWord) -> Result<f64> {
        Ok(self.run(word)?.probability)
    }

    /// Product of the quantum dimensions of the cap colors.
    pub fn dimension_factor(&self) -> f64 {
        self.ctx.q_int(self.color.twice() + 1).powi(self.caps() as i32)
    }

    /// `Π [2j_i + 1] · amplitude`, the uncalibrated link value.
    pub fn extended_jones(&self, word: &BraidWord) -> Result<Complex64> {
        Ok(self.run(word)?.amplitude() * self.dimension_factor())
    }
}

/// `(moves, bound)` for one word.
pub fn complexity_ledger(spec: &PlatSpec, word: &BraidWord) -> Result<(usize, f64)> {
    let r = Automaton::new(spec)?.run(word)?;
    Ok((r.moves, r.bound))
}

/// Uncalibrated value of the plat closure described by `spec` (its own word).
pub fn extended_jones(spec: &PlatSpec) -> Result<Complex64> {
    Automaton::new(spec)?.extended_jones(&spec.braid_word()?)
}
