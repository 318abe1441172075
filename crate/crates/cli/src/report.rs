//! Report structures for every command: built from core results, serialized
//! to JSON in declaration order (the wire contract), with a human-readable
//! text rendering that mirrors the same data.
//!
//! All rationals are emitted as `"p/q"` strings in lowest terms with `q > 0`
//! (including `q = 1`), and critical values as `{"over_2pi": "p/q"}` — no
//! floating point anywhere on the wire.

use std::fmt::Write as _;

use serde::Serialize;

use orbimod_core::line::LineVBundle;
use orbimod_core::morse::{self, MinimumStratum, Stratum};
use orbimod_core::poly::PoincarePoly;
use orbimod_core::ranktwo::{squarefree_class, topological_roots, RankTwoVBundle, Verdict};
use orbimod_core::rational::Rat;
use orbimod_core::reps::{self, Presentation, RealComponent, RotationData};
use orbimod_core::spectral::{self, Fibre};
use orbimod_core::surface::OrbifoldSurface;
use orbimod_core::{checks, Error};

use crate::input::{BundleInput, PoincareInput, RepsInput, SurfaceInput};

/// Longest rotation-vector listing emitted before truncation; the exact
/// count is always reported.
const ROTATION_LIST_CAP: usize = 512;

/// `"p/q"` in lowest terms, `q > 0`, denominator always present.
fn frac(r: Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Sign vector as a compact string: `+`, `-`, `0`.
fn eps_string(eps: &[i8]) -> String {
    eps.iter()
        .map(|&e| match e {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

#[derive(Serialize)]
pub struct LineClassDto {
    b: i64,
    y: Vec<u32>,
    c1: String,
}

impl LineClassDto {
    fn new(line: &LineVBundle) -> Self {
        LineClassDto {
            b: line.integer_part(),
            y: line.isotropy().to_vec(),
            c1: frac(line.c1()),
        }
    }
}

#[derive(Serialize)]
pub struct ConicalMetricDto {
    exists_unique: bool,
    cone_angles_over_pi: Vec<String>,
}

fn conical_dto(surface: &OrbifoldSurface) -> ConicalMetricDto {
    let report = reps::conical_metric_report(surface);
    ConicalMetricDto {
        exists_unique: report.exists_unique,
        cone_angles_over_pi: report
            .cone_angles_over_pi
            .into_iter()
            .map(frac)
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// surface

#[derive(Serialize)]
pub struct SurfaceReport {
    genus: u32,
    cone_orders: Vec<u32>,
    euler_characteristic: String,
    hyperbolic: bool,
    even_order_points: usize,
    canonical_class: LineClassDto,
    quadratic_differentials: Option<i64>,
    teichmuller_dim: Option<i64>,
    conical_metric: ConicalMetricDto,
    topological_roots: usize,
}

pub fn surface_report(input: &SurfaceInput) -> SurfaceReport {
    let m = &input.surface;
    let canonical = LineVBundle::canonical(m.clone());
    let hyperbolic = m.is_hyperbolic();
    SurfaceReport {
        genus: m.genus(),
        cone_orders: m.cone_orders().to_vec(),
        euler_characteristic: frac(m.euler_characteristic()),
        hyperbolic,
        even_order_points: m.even_order_points(),
        quadratic_differentials: hyperbolic.then(|| canonical.pow(2).chi()),
        canonical_class: LineClassDto::new(&canonical),
        teichmuller_dim: reps::teichmuller_dimension(m).ok(),
        conical_metric: conical_dto(m),
        topological_roots: topological_roots(m).len(),
    }
}

impl SurfaceReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "genus: {}", self.genus);
        let _ = writeln!(s, "cone orders: {:?}", self.cone_orders);
        let _ = writeln!(s, "euler characteristic: {}", self.euler_characteristic);
        let _ = writeln!(s, "hyperbolic: {}", self.hyperbolic);
        let _ = writeln!(s, "even cone orders: {}", self.even_order_points);
        let _ = writeln!(
            s,
            "canonical class: b={} y={:?} c1={}",
            self.canonical_class.b, self.canonical_class.y, self.canonical_class.c1
        );
        let _ = writeln!(
            s,
            "quadratic differentials: {}",
            opt_int(self.quadratic_differentials)
        );
        let _ = writeln!(s, "teichmuller dim: {}", opt_int(self.teichmuller_dim));
        let _ = writeln!(
            s,
            "conical metric: exists_unique={} angles/pi={}",
            self.conical_metric.exists_unique,
            self.conical_metric.cone_angles_over_pi.join(", ")
        );
        let _ = writeln!(s, "topological roots: {}", self.topological_roots);
        s
    }
}

fn opt_int(v: Option<i64>) -> String {
    match v {
        Some(n) => n.to_string(),
        None => "none".to_string(),
    }
}

// ---------------------------------------------------------------------------
// bundle

#[derive(Serialize)]
pub struct WeightDto {
    lambda: String,
    lambda_prime: String,
    degenerate: bool,
}

#[derive(Serialize)]
pub struct WitnessDto {
    m: i64,
    eps: Vec<i8>,
    sub_degree: String,
}

#[derive(Serialize)]
pub struct DroppedPointDto {
    index: usize,
    alpha: u32,
    x: u32,
}

#[derive(Serialize)]
pub struct ReducedDto {
    cone_orders: Vec<u32>,
    pairs: Vec<(u32, u32)>,
    l: i64,
    dropped: Vec<DroppedPointDto>,
}

#[derive(Serialize)]
pub struct SemistableDto {
    end0_k_nontrivial: i64,
    end0_k_trivial: i64,
    e_dual_kl: i64,
    k_lm2_det: i64,
    k_l2_det_dual: i64,
}

#[derive(Serialize)]
pub struct SubBundleDto {
    m: i64,
    eps: Vec<i8>,
    degree: String,
    chi_k_lm2_det: i64,
    chi_k_l2_det_dual: i64,
    all_higgs_invariant: bool,
    on_wall: bool,
    semistable_h0: Option<SemistableDto>,
}

#[derive(Serialize)]
#[serde(tag = "answer", rename_all = "snake_case")]
pub enum VerdictDto {
    Yes { isolated_point: bool },
    No { violated: String },
    Conditional { needs: Vec<String> },
}

impl VerdictDto {
    fn new(v: Verdict) -> Self {
        match v {
            Verdict::Yes { isolated_point } => VerdictDto::Yes { isolated_point },
            Verdict::No { violated } => VerdictDto::No { violated },
            Verdict::Conditional { needs } => VerdictDto::Conditional { needs },
        }
    }
}

#[derive(Serialize)]
pub struct BundleReport {
    genus: u32,
    cone_orders: Vec<u32>,
    pairs: Vec<(u32, u32)>,
    l: i64,
    n0: usize,
    free_points: usize,
    c1_det: String,
    det_class: LineClassDto,
    moduli_dimension: i64,
    moduli_dimension_real: i64,
    bounds_attainable: bool,
    parabolic_weights: Vec<WeightDto>,
    squarefree_det: LineClassDto,
    reducible: bool,
    reduction_witness: Option<WitnessDto>,
    reduced: Option<ReducedDto>,
    sub_bundle: Option<SubBundleDto>,
    stable_pair: Option<VerdictDto>,
}

pub fn bundle_report(input: &BundleInput) -> Result<BundleReport, Error> {
    let e = &input.bundle;
    let det = e.det_class();

    let witness = e.reduction_witness()?;
    let reduction_witness = match &witness {
        Some(spec) => Some(WitnessDto {
            m: spec.m,
            eps: spec.eps.eps().to_vec(),
            sub_degree: frac(e.sub_bundle(spec)?.c1()),
        }),
        None => None,
    };

    let reduced = if e.free_points() == 0 {
        None
    } else {
        let r = e.reduce()?;
        Some(ReducedDto {
            cone_orders: r.bundle.surface().cone_orders().to_vec(),
            pairs: r.bundle.pairs().to_vec(),
            l: r.bundle.det_integer_part(),
            dropped: r
                .dropped
                .iter()
                .map(|d| DroppedPointDto {
                    index: d.index,
                    alpha: d.alpha,
                    x: d.x,
                })
                .collect(),
        })
    };

    let sub_bundle = match &input.sub_bundle {
        None => None,
        Some(spec) => {
            let line = e.sub_bundle(spec)?;
            let (down, up) = e.chi_twists(spec)?;
            let (on_wall, semistable_h0) = match e.semistable_h0(spec) {
                Ok(h) => (
                    true,
                    Some(SemistableDto {
                        end0_k_nontrivial: h.end0_k_nontrivial,
                        end0_k_trivial: h.end0_k_trivial,
                        e_dual_kl: h.e_dual_kl,
                        k_lm2_det: h.k_lm2_det,
                        k_l2_det_dual: h.k_l2_det_dual,
                    }),
                ),
                Err(Error::WallViolation) => (false, None),
                Err(other) => return Err(other),
            };
            Some(SubBundleDto {
                m: spec.m,
                eps: spec.eps.eps().to_vec(),
                degree: frac(line.c1()),
                chi_k_lm2_det: down,
                chi_k_l2_det_dual: up,
                all_higgs_invariant: e.all_higgs_invariant(spec)?,
                on_wall,
                semistable_h0,
            })
        }
    };

    let stable_pair = match &input.stability {
        None => None,
        Some(class) => Some(VerdictDto::new(e.stable_pair_exists(class)?)),
    };

    Ok(BundleReport {
        genus: e.surface().genus(),
        cone_orders: e.surface().cone_orders().to_vec(),
        pairs: e.pairs().to_vec(),
        l: e.det_integer_part(),
        n0: e.n0(),
        free_points: e.free_points(),
        c1_det: frac(e.c1_det()),
        det_class: LineClassDto::new(&det),
        moduli_dimension: e.moduli_dimension(),
        moduli_dimension_real: e.moduli_dimension_real(),
        bounds_attainable: e.bounds_attainable()?,
        parabolic_weights: e
            .parabolic_weights()
            .into_iter()
            .map(|w| WeightDto {
                lambda: frac(w.lambda),
                lambda_prime: frac(w.lambda_prime),
                degenerate: w.degenerate,
            })
            .collect(),
        squarefree_det: LineClassDto::new(&squarefree_class(&det)),
        reducible: witness.is_some(),
        reduction_witness,
        reduced,
        sub_bundle,
        stable_pair,
    })
}

impl BundleReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "genus: {}", self.genus);
        let _ = writeln!(s, "cone orders: {:?}", self.cone_orders);
        let _ = writeln!(s, "pairs: {:?}", self.pairs);
        let _ = writeln!(s, "l: {}", self.l);
        let _ = writeln!(s, "n0: {}  free points: {}", self.n0, self.free_points);
        let _ = writeln!(s, "c1(det): {}", self.c1_det);
        let _ = writeln!(
            s,
            "det class: b={} y={:?}",
            self.det_class.b, self.det_class.y
        );
        let _ = writeln!(
            s,
            "moduli dimension: {} (real {})",
            self.moduli_dimension, self.moduli_dimension_real
        );
        let _ = writeln!(s, "bounds attainable: {}", self.bounds_attainable);
        for w in &self.parabolic_weights {
            let _ = writeln!(
                s,
                "weight: ({}, {}){}",
                w.lambda,
                w.lambda_prime,
                if w.degenerate { " degenerate" } else { "" }
            );
        }
        let _ = writeln!(
            s,
            "squarefree det: b={} y={:?}",
            self.squarefree_det.b, self.squarefree_det.y
        );
        let _ = writeln!(s, "reducible: {}", self.reducible);
        if let Some(w) = &self.reduction_witness {
            let _ = writeln!(
                s,
                "reduction witness: m={} eps={} degree={}",
                w.m,
                eps_string(&w.eps),
                w.sub_degree
            );
        }
        if let Some(r) = &self.reduced {
            let _ = writeln!(
                s,
                "reduced: cone orders {:?}, pairs {:?}, l={}, dropped {}",
                r.cone_orders,
                r.pairs,
                r.l,
                r.dropped.len()
            );
        }
        if let Some(sb) = &self.sub_bundle {
            let _ = writeln!(
                s,
                "sub-bundle m={} eps={}: degree={} chi(K L^-2 det)={} chi(K L^2 det*)={} \
                 all-higgs-invariant={}",
                sb.m,
                eps_string(&sb.eps),
                sb.degree,
                sb.chi_k_lm2_det,
                sb.chi_k_l2_det_dual,
                sb.all_higgs_invariant
            );
            match &sb.semistable_h0 {
                Some(h) => {
                    let _ = writeln!(
                        s,
                        "on wall: h0(End0 E (x) K) = {} (nontrivial) / {} (trivial), \
                         h0(E* (x) KL) = {}, h0(K L^-2 det) = {}, h0(K L^2 det*) = {}",
                        h.end0_k_nontrivial,
                        h.end0_k_trivial,
                        h.e_dual_kl,
                        h.k_lm2_det,
                        h.k_l2_det_dual
                    );
                }
                None => {
                    let _ = writeln!(s, "off the semi-stable wall");
                }
            }
        }
        if let Some(v) = &self.stable_pair {
            let _ = match v {
                VerdictDto::Yes { isolated_point } => {
                    writeln!(s, "stable pair: yes (isolated point: {isolated_point})")
                }
                VerdictDto::No { violated } => writeln!(s, "stable pair: no ({violated})"),
                VerdictDto::Conditional { needs } => {
                    writeln!(s, "stable pair: conditional on {}", needs.join("; "))
                }
            };
        }
        s
    }
}

// ---------------------------------------------------------------------------
// strata

#[derive(Serialize)]
pub struct CriticalValueDto {
    over_2pi: String,
}

#[derive(Serialize)]
pub struct StratumDto {
    m: i64,
    eps: Vec<i8>,
    value: CriticalValueDto,
    index: i64,
    r: i64,
    cover_order: u64,
}

impl StratumDto {
    fn new(s: &Stratum) -> Self {
        StratumDto {
            m: s.spec.m,
            eps: s.spec.eps.eps().to_vec(),
            value: CriticalValueDto {
                over_2pi: frac(s.value_over_2pi),
            },
            index: s.index,
            r: s.r,
            cover_order: s.cover_order,
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinimumDto {
    StableBundlesModuli { complex_dim: i64 },
    ProjectiveStratum(StratumDto),
}

impl MinimumDto {
    fn new(m: &MinimumStratum) -> Self {
        match m {
            MinimumStratum::StableBundlesModuli { complex_dim } => {
                MinimumDto::StableBundlesModuli {
                    complex_dim: *complex_dim,
                }
            }
            MinimumStratum::ProjectiveStratum(s) => {
                MinimumDto::ProjectiveStratum(StratumDto::new(s))
            }
        }
    }
}

#[derive(Serialize)]
pub struct TopologyDto {
    connected: bool,
    simply_connected: bool,
    compact: bool,
    isolated_point: bool,
    real_dim: i64,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentDto {
    StableBundles {
        complex_dim: i64,
    },
    VectorBundleOverCover {
        rank: i64,
        base_sym_power: i64,
        cover_order: u64,
        complex_dim: i64,
    },
}

impl ComponentDto {
    fn new(c: &RealComponent) -> Self {
        match *c {
            RealComponent::StableBundles { complex_dim } => {
                ComponentDto::StableBundles { complex_dim }
            }
            RealComponent::VectorBundleOverCover {
                rank,
                base_sym_power,
                cover_order,
                complex_dim,
            } => ComponentDto::VectorBundleOverCover {
                rank,
                base_sym_power,
                cover_order,
                complex_dim,
            },
        }
    }
}

#[derive(Serialize)]
pub struct StrataReport {
    strata: Vec<StratumDto>,
    minimum: MinimumDto,
    topology: TopologyDto,
    real_components: Vec<ComponentDto>,
}

pub fn strata_report(bundle: &RankTwoVBundle) -> Result<StrataReport, Error> {
    let strata = morse::enumerate_strata(bundle)?;
    let minimum = morse::minimum_stratum(bundle)?;
    let topology = morse::topology_report(bundle)?;
    let components = reps::real_fixed_components(bundle)?;
    Ok(StrataReport {
        strata: strata.iter().map(StratumDto::new).collect(),
        minimum: MinimumDto::new(&minimum),
        topology: TopologyDto {
            connected: topology.connected,
            simply_connected: topology.simply_connected,
            compact: topology.compact,
            isolated_point: topology.isolated_point,
            real_dim: topology.real_dim,
        },
        real_components: components.iter().map(ComponentDto::new).collect(),
    })
}

fn stratum_line(s: &StratumDto) -> String {
    format!(
        "m={} eps={} value/2pi={} index={} r={} cover={}",
        s.m,
        eps_string(&s.eps),
        s.value.over_2pi,
        s.index,
        s.r,
        s.cover_order
    )
}

fn minimum_line(m: &MinimumDto) -> String {
    match m {
        MinimumDto::StableBundlesModuli { complex_dim } => {
            format!("stable-bundle moduli, complex dim {complex_dim}")
        }
        MinimumDto::ProjectiveStratum(s) => format!("projective stratum: {}", stratum_line(s)),
    }
}

fn component_line(c: &ComponentDto) -> String {
    match c {
        ComponentDto::StableBundles { complex_dim } => {
            format!("stable bundles: complex dim {complex_dim}")
        }
        ComponentDto::VectorBundleOverCover {
            rank,
            base_sym_power,
            cover_order,
            complex_dim,
        } => format!(
            "bundle over cover: rank={rank} sym-power={base_sym_power} \
             cover-order={cover_order} complex dim {complex_dim}"
        ),
    }
}

impl StrataReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "strata ({}):", self.strata.len());
        for st in &self.strata {
            let _ = writeln!(s, "  {}", stratum_line(st));
        }
        let _ = writeln!(s, "minimum: {}", minimum_line(&self.minimum));
        let _ = writeln!(
            s,
            "topology: connected={} simply_connected={} compact={} isolated_point={} real_dim={}",
            self.topology.connected,
            self.topology.simply_connected,
            self.topology.compact,
            self.topology.isolated_point,
            self.topology.real_dim
        );
        let _ = writeln!(s, "real components ({}):", self.real_components.len());
        for c in &self.real_components {
            let _ = writeln!(s, "  {}", component_line(c));
        }
        s
    }
}

// ---------------------------------------------------------------------------
// poincare

#[derive(Serialize)]
pub struct SymbolicTermDto {
    shift: usize,
    name: String,
    coeff: i64,
}

#[derive(Serialize)]
pub struct PolyDto {
    coeffs: Vec<i64>,
    symbolic: Vec<SymbolicTermDto>,
    display: String,
}

impl PolyDto {
    fn new(p: &PoincarePoly) -> Self {
        PolyDto {
            coeffs: p.coeffs().to_vec(),
            symbolic: p
                .symbolic()
                .iter()
                .map(|t| SymbolicTermDto {
                    shift: t.shift,
                    name: t.name.clone(),
                    coeff: t.coeff,
                })
                .collect(),
            display: p.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct PoincareReport {
    poincare: PolyDto,
    assumes_perfect_morse: bool,
    euler_characteristic: Option<i64>,
    minimum: MinimumDto,
}

pub fn poincare_report(input: &PoincareInput) -> Result<PoincareReport, Error> {
    let p = morse::poincare_polynomial(
        &input.bundle,
        input.min_poly.as_ref(),
        &input.cover_polys,
    )?;
    let euler = morse::euler_characteristic_moduli(&input.bundle, input.chi_min)?;
    let minimum = morse::minimum_stratum(&input.bundle)?;
    Ok(PoincareReport {
        poincare: PolyDto::new(&p),
        assumes_perfect_morse: true,
        euler_characteristic: euler,
        minimum: MinimumDto::new(&minimum),
    })
}

impl PoincareReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "poincare polynomial: {}", self.poincare.display);
        let _ = writeln!(s, "coefficients: {:?}", self.poincare.coeffs);
        let _ = writeln!(s, "assumes perfect morse: {}", self.assumes_perfect_morse);
        let _ = writeln!(
            s,
            "euler characteristic: {}",
            opt_int(self.euler_characteristic)
        );
        let _ = writeln!(s, "minimum: {}", minimum_line(&self.minimum));
        s
    }
}

// ---------------------------------------------------------------------------
// spectral

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FibreDto {
    Prym { dim: i64 },
    Jacobian { dim: i64 },
    ZeroMap,
}

#[derive(Serialize)]
pub struct SpecialSubBundleDto {
    degree: String,
    isotropy: u32,
}

#[derive(Serialize)]
pub struct SpectralReport {
    base_dim: i64,
    branch_points: Option<i64>,
    spectral_genus: Option<i64>,
    fibre: FibreDto,
    generic_caveat: bool,
    special_subbundle: Option<SpecialSubBundleDto>,
}

pub fn spectral_report(bundle: &RankTwoVBundle) -> Result<SpectralReport, Error> {
    let data = spectral::spectral_data(bundle);
    let special = match spectral::special_case_subbundle_degrees(bundle) {
        Ok(s) => Some(SpecialSubBundleDto {
            degree: frac(s.degree),
            isotropy: s.isotropy,
        }),
        Err(Error::NotSingleEllipticPoint) => None,
        Err(other) => return Err(other),
    };
    Ok(SpectralReport {
        base_dim: data.base_dim,
        branch_points: data.branch_points,
        spectral_genus: data.spectral_genus,
        fibre: match data.fibre {
            Fibre::Prym { dim } => FibreDto::Prym { dim },
            Fibre::Jacobian { dim } => FibreDto::Jacobian { dim },
            Fibre::ZeroMap => FibreDto::ZeroMap,
        },
        generic_caveat: data.generic_caveat,
        special_subbundle: special,
    })
}

impl SpectralReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "base dim: {}", self.base_dim);
        let _ = writeln!(s, "branch points: {}", opt_int(self.branch_points));
        let _ = writeln!(s, "spectral genus: {}", opt_int(self.spectral_genus));
        let _ = match &self.fibre {
            FibreDto::Prym { dim } => writeln!(s, "fibre: prym, dim {dim}"),
            FibreDto::Jacobian { dim } => writeln!(s, "fibre: jacobian, dim {dim}"),
            FibreDto::ZeroMap => writeln!(s, "fibre: zero map"),
        };
        let _ = writeln!(s, "generic caveat: {}", self.generic_caveat);
        if let Some(sp) = &self.special_subbundle {
            let _ = writeln!(
                s,
                "special sub-bundle: degree={} isotropy={}",
                sp.degree, sp.isotropy
            );
        }
        s
    }
}

// ---------------------------------------------------------------------------
// reps

#[derive(Serialize)]
pub struct PresentationDto {
    generators: Vec<String>,
    relations: Vec<Vec<(String, i64)>>,
}

impl PresentationDto {
    fn new(p: &Presentation) -> Self {
        PresentationDto {
            generators: p.generators.clone(),
            relations: p.relations.clone(),
        }
    }
}

fn word_text(word: &[(String, i64)]) -> String {
    word.iter()
        .map(|(g, e)| {
            if *e == 1 {
                g.clone()
            } else {
                format!("{g}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn presentation_text(s: &mut String, label: &str, p: &PresentationDto) {
    let _ = writeln!(s, "{label}: <{}>", p.generators.join(", "));
    for w in &p.relations {
        let _ = writeln!(s, "  relator: {}", word_text(w));
    }
}

#[derive(Serialize)]
pub struct MilnorWoodDto {
    bound: String,
    satisfied: bool,
}

#[derive(Serialize)]
pub struct RotationListDto {
    count: u64,
    list: Vec<Vec<u32>>,
    truncated: bool,
}

#[derive(Serialize)]
pub struct RotationInputDto {
    r: Vec<u32>,
    n0: usize,
    rep_variety_dimension: i64,
    reducible_witness: Option<Vec<i8>>,
    sign_twist_orbit: Vec<Vec<u32>>,
}

#[derive(Serialize)]
pub struct RepsLineDto {
    b: i64,
    y: Vec<u32>,
    euler_class: String,
    milnor_wood: MilnorWoodDto,
    circle_presentation: PresentationDto,
    z2_presentation: PresentationDto,
    psl2r_component: Option<ComponentDto>,
    rotation: RotationListDto,
    rotation_input: Option<RotationInputDto>,
}

#[derive(Serialize)]
pub struct RepsReport {
    fuchsian: PresentationDto,
    teichmuller_dim: Option<i64>,
    conical_metric: ConicalMetricDto,
    line: Option<RepsLineDto>,
}

pub fn reps_report(input: &RepsInput) -> Result<RepsReport, Error> {
    let m = &input.surface;
    let line = match &input.line {
        None => None,
        Some(l) => {
            let euler = l.c1();
            let psl2r = match reps::psl2r_component(m, l.integer_part(), l.isotropy()) {
                Ok(c) => Some(ComponentDto::new(&c)),
                Err(Error::EulerClassNotPositive)
                | Err(Error::EulerIntegerPartTooLarge { .. }) => None,
                Err(other) => return Err(other),
            };

            let count_u128 = reps::compatible_rotation_count(l);
            let count = u64::try_from(count_u128)
                .expect("rotation count fits in 64 bits for documented input ranges");
            let list: Vec<Vec<u32>> = reps::compatible_rotation_numbers(l)
                .take(ROTATION_LIST_CAP)
                .map(|rd| rd.r().to_vec())
                .collect();
            let truncated = (list.len() as u64) < count;

            let rotation_input = match &input.rotation_numbers {
                None => None,
                Some(r) => {
                    let rd = RotationData::new(m, r.clone())?;
                    let dim = reps::rep_variety_dimension(l, &rd)?;
                    let witness = reps::rep_reducible(l, &rd)?;
                    let orbit = reps::sign_twist_orbit(l, &rd)?;
                    Some(RotationInputDto {
                        r: rd.r().to_vec(),
                        n0: rd.n0(),
                        rep_variety_dimension: dim,
                        reducible_witness: witness.map(|w| w.eps().to_vec()),
                        sign_twist_orbit: orbit.iter().map(|o| o.r().to_vec()).collect(),
                    })
                }
            };

            Some(RepsLineDto {
                b: l.integer_part(),
                y: l.isotropy().to_vec(),
                euler_class: frac(euler),
                milnor_wood: MilnorWoodDto {
                    bound: frac(-m.euler_characteristic()),
                    satisfied: reps::milnor_wood(m, euler),
                },
                circle_presentation: PresentationDto::new(&reps::circle_group_presentation(l)),
                z2_presentation: PresentationDto::new(&reps::z2_extension_presentation(l)),
                psl2r_component: psl2r,
                rotation: RotationListDto {
                    count,
                    list,
                    truncated,
                },
                rotation_input,
            })
        }
    };

    Ok(RepsReport {
        fuchsian: PresentationDto::new(&reps::fuchsian_presentation(m)),
        teichmuller_dim: reps::teichmuller_dimension(m).ok(),
        conical_metric: conical_dto(m),
        line,
    })
}

impl RepsReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        presentation_text(&mut s, "fuchsian", &self.fuchsian);
        let _ = writeln!(s, "teichmuller dim: {}", opt_int(self.teichmuller_dim));
        let _ = writeln!(
            s,
            "conical metric: exists_unique={} angles/pi={}",
            self.conical_metric.exists_unique,
            self.conical_metric.cone_angles_over_pi.join(", ")
        );
        if let Some(l) = &self.line {
            let _ = writeln!(s, "line bundle: b={} y={:?}", l.b, l.y);
            let _ = writeln!(s, "euler class: {}", l.euler_class);
            let _ = writeln!(
                s,
                "milnor-wood: bound={} satisfied={}",
                l.milnor_wood.bound, l.milnor_wood.satisfied
            );
            presentation_text(&mut s, "circle extension", &l.circle_presentation);
            presentation_text(&mut s, "z2 extension", &l.z2_presentation);
            let _ = match &l.psl2r_component {
                Some(c) => writeln!(s, "psl2r component: {}", component_line(c)),
                None => writeln!(s, "psl2r component: none"),
            };
            let _ = writeln!(
                s,
                "compatible rotation vectors: {}{}",
                l.rotation.count,
                if l.rotation.truncated {
                    " (listing truncated)"
                } else {
                    ""
                }
            );
            for r in &l.rotation.list {
                let _ = writeln!(s, "  {r:?}");
            }
            if let Some(ri) = &l.rotation_input {
                let _ = writeln!(
                    s,
                    "rotation input {:?}: n0={} dim={} reducible={}",
                    ri.r,
                    ri.n0,
                    ri.rep_variety_dimension,
                    match &ri.reducible_witness {
                        Some(w) => eps_string(w),
                        None => "no".to_string(),
                    }
                );
                let _ = writeln!(s, "sign-twist orbit ({}):", ri.sign_twist_orbit.len());
                for o in &ri.sign_twist_orbit {
                    let _ = writeln!(s, "  {o:?}");
                }
            }
        }
        s
    }
}

// ---------------------------------------------------------------------------
// check

#[derive(Serialize)]
pub struct SuiteDto {
    id: u32,
    name: String,
    pass: bool,
    details: String,
}

#[derive(Serialize)]
pub struct CheckReport {
    suites: Vec<SuiteDto>,
    passed: usize,
    failed: usize,
}

pub fn check_report() -> CheckReport {
    let results = checks::run_all();
    let passed = results.iter().filter(|r| r.pass).count();
    let failed = results.len() - passed;
    CheckReport {
        suites: results
            .into_iter()
            .map(|r| SuiteDto {
                id: r.id,
                name: r.name.to_string(),
                pass: r.pass,
                details: r.details,
            })
            .collect(),
        passed,
        failed,
    }
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for suite in &self.suites {
            let _ = writeln!(
                s,
                "{:>2} {:<28} {}  {}",
                suite.id,
                suite.name,
                if suite.pass { "PASS" } else { "FAIL" },
                suite.details
            );
        }
        let _ = writeln!(s, "passed {} of {} suites", self.passed, self.suites.len());
        s
    }
}
