use crate::algebra::{PolyMatrix, VarRegistry};
use crate::designs::{verify_od, DesignError, TypeVector, VerificationReport};

use super::builders::{
    aod168_circulant, aod16_vars, aod24_vars, aod48_circulant, aod72_circulant, aod_2, aod_2_split,
    pd12, pd8, PdTriple,
};
use super::combine::{combine_pd_aod, double_aod, CombineVariant};
use super::tables::BuildMode;
use super::wolfe::{aod512, od1024};
use super::{AodPair, ConstructionError};

/// A built design of any of the three kinds the catalog produces.
#[derive(Debug, Clone)]
pub enum Design {
    Od {
        matrix: PolyMatrix,
        od_type: TypeVector,
    },
    Aod(AodPair),
    Pd(PdTriple),
}

impl Design {
    pub fn order(&self) -> usize {
        match self {
            Design::Od { matrix, .. } => matrix.order(),
            Design::Aod(pair) => pair.order(),
            Design::Pd(triple) => triple.order(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Design::Od { .. } => "od",
            Design::Aod(_) => "aod",
            Design::Pd(_) => "pd",
        }
    }

    pub fn verify(&self) -> Result<VerificationReport, DesignError> {
        match self {
            Design::Od { matrix, od_type } => Ok(verify_od(matrix, od_type)),
            Design::Aod(pair) => pair.verify(),
            Design::Pd(triple) => Ok(triple.verify()),
        }
    }
}

/// One named builder. Building any entry yields a design that has already
/// passed its verification; `build` fails rather than return an unverified
/// candidate.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub order: usize,
    pub build: fn(&mut VarRegistry) -> Result<Design, ConstructionError>,
}

/// All named designs, light to heavy.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "aod2",
            summary: "AOD(2; 1,1; 1,1), the order-2 amicable pair",
            order: 2,
            build: |reg| aod_2(reg).map(Design::Aod),
        },
        CatalogEntry {
            name: "pd8",
            summary: "PD(8; 1,1,1; 1,1,1; 5)",
            order: 8,
            build: |reg| pd8(reg).map(Design::Pd),
        },
        CatalogEntry {
            name: "pd12",
            summary: "PD(12; 1,1,1; 1,1,1; 9)",
            order: 12,
            build: |reg| pd12(reg).map(Design::Pd),
        },
        CatalogEntry {
            name: "aod16",
            summary: "full AOD(16; 2,2,2,10; 2,2,2,10) in eight variables",
            order: 16,
            build: |reg| aod16_vars(reg).map(Design::Aod),
        },
        CatalogEntry {
            name: "aod24",
            summary: "full AOD(24; 2,2,2,18; 2,2,2,18) in eight variables",
            order: 24,
            build: |reg| aod24_vars(reg).map(Design::Aod),
        },
        CatalogEntry {
            name: "od16_combined",
            summary: "full OD(16; 1,1,1,1,1,1,10) = pd8 combined with the split aod2",
            order: 16,
            build: |reg| {
                let pd = pd8(reg)?;
                let split = aod_2_split(reg)?;
                let (matrix, od_type) = combine_pd_aod(&pd, &split, CombineVariant::I, reg)?;
                Ok(Design::Od { matrix, od_type })
            },
        },
        CatalogEntry {
            name: "od24_combined",
            summary: "full OD(24; 1,1,1,1,1,1,9,9) = pd12 combined with the split aod2",
            order: 24,
            build: |reg| {
                let pd = pd12(reg)?;
                let split = aod_2_split(reg)?;
                let (matrix, od_type) = combine_pd_aod(&pd, &split, CombineVariant::II, reg)?;
                Ok(Design::Od { matrix, od_type })
            },
        },
        CatalogEntry {
            name: "aod48_example_3_2",
            summary: "full AOD(48; 4,10,34; 4,44) from order-3 circulants",
            order: 48,
            build: |reg| aod48_circulant(reg, BuildMode::Full).map(Design::Aod),
        },
        CatalogEntry {
            name: "aod48_example_3_2_disjoint",
            summary: "disjoint AOD(48; 2,5,17; 2,22) from order-3 circulants",
            order: 48,
            build: |reg| aod48_circulant(reg, BuildMode::Disjoint).map(Design::Aod),
        },
        CatalogEntry {
            name: "aod48_doubled",
            summary: "full AOD(48; 18,18,4,4,4; 36,4,4,4), aod24 doubled once",
            order: 48,
            build: |reg| {
                let base = aod24_vars(reg)?;
                double_aod(&base, 1, reg).map(Design::Aod)
            },
        },
        CatalogEntry {
            name: "aod72",
            summary: "full AOD(72; 18,54; 72) from order-3 circulants",
            order: 72,
            build: |reg| aod72_circulant(reg, BuildMode::Full).map(Design::Aod),
        },
        CatalogEntry {
            name: "aod96_doubled",
            summary: "full AOD(96; 18,18,36,8,8,8; 72,8,8,8), aod24 doubled twice",
            order: 96,
            build: |reg| {
                let base = aod24_vars(reg)?;
                double_aod(&base, 2, reg).map(Design::Aod)
            },
        },
        CatalogEntry {
            name: "aod168",
            summary: "full AOD(168; 4,164; 4,164) from order-7 circulants",
            order: 168,
            build: |reg| aod168_circulant(reg, BuildMode::Full).map(Design::Aod),
        },
        CatalogEntry {
            name: "aod512",
            summary: "full AOD(512; 64 x8; 64 x8) in sixteen variables",
            order: 512,
            build: |reg| aod512(reg).map(Design::Aod),
        },
        CatalogEntry {
            name: "od1024",
            summary: "full OD(1024; 64 x16)",
            order: 1024,
            build: |reg| {
                let (matrix, od_type) = od1024(reg)?;
                Ok(Design::Od { matrix, od_type })
            },
        },
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
