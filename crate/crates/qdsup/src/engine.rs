//! Shared engine: configuration, coefficient context, and the caches used by
//! the algebra layers.
//!
//! Elements and maps are immutable values; every cache is keyed and follows a
//! single-writer discipline (duplicate computations may race but install
//! identical results, since all computations are deterministic).

use std::sync::Arc;

use dashmap::DashMap;

use crate::coeff::{Coeff, HalfExponent, Smp, SmpCtx, Sym};
use crate::error::Result;

/// Choice of sign for the two adjoined square roots used by the reflection
/// isomorphisms. All verified identities must be independent of this choice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignConvention {
    pub sa_positive: bool,
    pub sb_positive: bool,
}

impl Default for SignConvention {
    fn default() -> Self {
        SignConvention {
            sa_positive: true,
            sb_positive: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Maximal height of a one-sided word weight the ideal machinery accepts.
    pub height_bound: u32,
    /// Default loop-index budget for root vectors.
    pub k_max: i32,
    /// Default visited-state bound of the braid-equality search.
    pub move_bound: usize,
    /// Seed for randomized property suites.
    pub seed: u64,
    pub signs: SignConvention,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            height_bound: 10,
            k_max: 2,
            move_bound: 10_000,
            seed: 0,
            signs: SignConvention::default(),
        }
    }
}

type ElemArc<S> = Arc<crate::uqd::Elem<S>>;
type MapArc<S> = Arc<crate::lusztig::GenImages<S>>;

/// Engine: configuration plus caches, generic over the coefficient model.
pub struct Engine<S: Coeff> {
    pub cfg: EngineConfig,
    pub ctx: S::Ctx,
    /// Per-diagram Serre-ideal rewriters (E-side rules; the F side mirrors).
    pub(crate) rewriters: DashMap<u8, Arc<crate::uqd::ideal::IdealRewriter<S>>>,
    /// Reflection isomorphisms `T_{i,d}` (`true` = plus variant).
    pub(crate) tmaps: DashMap<(u8, u8, bool), MapArc<S>>,
    /// Composite maps along the lattice words and their inverses.
    pub(crate) omega_maps: DashMap<(u8, u8, bool), MapArc<S>>,
    /// Cached root-vector ingredients `(d, i, k, kind)`.
    pub(crate) omega_pows: DashMap<(u8, u8, i32, u8), ElemArc<S>>,
    /// Type-one imaginary root vectors `(d, i, k)`.
    pub(crate) psi_cache: DashMap<(u8, u8, i32), ElemArc<S>>,
    /// Type-two imaginary root vectors `(d, i, k)`.
    pub(crate) h_cache: DashMap<(u8, u8, i32), ElemArc<S>>,
    /// Labeled Serre generators per diagram (E side and F side).
    pub(crate) serre_cache: DashMap<u8, Arc<Vec<(String, crate::uqd::Elem<S>)>>>,
}

impl<S: Coeff> Engine<S> {
    pub fn with_ctx(cfg: EngineConfig, ctx: S::Ctx) -> Self {
        Engine {
            cfg,
            ctx,
            rewriters: DashMap::new(),
            tmaps: DashMap::new(),
            omega_maps: DashMap::new(),
            omega_pows: DashMap::new(),
            psi_cache: DashMap::new(),
            h_cache: DashMap::new(),
            serre_cache: DashMap::new(),
        }
    }

    // Scalar construction shorthands.

    pub fn s0(&self) -> S {
        S::zero(&self.ctx)
    }
    pub fn s1(&self) -> S {
        S::one(&self.ctx)
    }
    pub fn si(&self, n: i64) -> S {
        S::from_int(&self.ctx, n)
    }
    pub fn sr(&self, n: i64, d: i64) -> S {
        S::from_ratio(&self.ctx, n, d)
    }
    pub fn qp(&self, e: HalfExponent) -> S {
        S::qpow(&self.ctx, e)
    }
    pub fn qn(&self, e: HalfExponent) -> S {
        S::qnum(&self.ctx, e)
    }
    /// The adjoined square root of `[x]_q`, honoring the sign convention.
    pub fn sa(&self) -> S {
        let s = S::sqrt_a(&self.ctx);
        if self.cfg.signs.sa_positive {
            s
        } else {
            s.neg()
        }
    }
    /// The adjoined square root of `-[x+1]_q`, honoring the sign convention.
    pub fn sb(&self) -> S {
        let s = S::sqrt_b(&self.ctx);
        if self.cfg.signs.sb_positive {
            s
        } else {
            s.neg()
        }
    }
    /// `(-1)^n`.
    pub fn msign(&self, n: i32) -> S {
        if n.rem_euclid(2) == 0 {
            self.s1()
        } else {
            self.si(-1)
        }
    }
    /// Integer power of a scalar, with negative exponents through the inverse.
    pub fn spow(&self, s: &S, n: i32) -> Result<S> {
        let base = if n < 0 { s.inv()? } else { s.clone() };
        let mut acc = self.s1();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl Engine<Sym> {
    pub fn symbolic(cfg: EngineConfig) -> Self {
        Engine::with_ctx(cfg, ())
    }
}

impl Engine<Smp> {
    pub fn sampled(cfg: EngineConfig, ctx: SmpCtx) -> Self {
        Engine::with_ctx(cfg, ctx)
    }
}
