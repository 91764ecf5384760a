use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("delta must be positive, got {0}")]
    InvalidDelta(f64),

    #[error("parameter {name} = {value} outside admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("arclength parameter {s} outside [0, {max}]")]
    ArcParamOutOfRange { s: f64, max: f64 },

    #[error("pair is not at unit distance: measured {distance}")]
    NotUnitDistance { distance: f64 },

    #[error("schedule has {len} entries, stage {needed} requested")]
    ScheduleTooShort { len: usize, needed: usize },

    #[error("schedule is not strictly decreasing at index {0}")]
    ScheduleNotDecreasing(usize),

    #[error("predicted point count {predicted} exceeds cap {cap}")]
    ResourceCap { predicted: u64, cap: u64 },

    #[error("stage {requested} not available, construction is at stage {stage}")]
    StageMismatch { requested: usize, stage: usize },

    #[error("pair directions are not dense enough for delta = {delta}: gap {gap} > {allowed}")]
    DirectionCoverage { delta: f64, gap: f64, allowed: f64 },

    #[error("initial configuration fails direction coverage: gap {gap} > {allowed}")]
    InitialCoverage { gap: f64, allowed: f64 },

    #[error("covering scale {0} below float-resolution guard")]
    ScaleTooSmall(f64),

    #[error("coordinate {0} does not fit the integer grid at this scale")]
    GridOverflow(f64),

    #[error("input is empty: {0}")]
    EmptyInput(&'static str),

    #[error("cannot fit a slope to degenerate data")]
    DegenerateData,
}
