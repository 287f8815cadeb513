use crate::error::{Error, Result};

/// A deterministic 1-D sampling grid.
///
/// Endpoints are reproduced exactly; interior points are computed from the
/// index so that two grids with identical parameters are bit-identical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    min: f64,
    max: f64,
    steps: usize,
    log_spaced: bool,
}

impl Grid {
    pub fn linear(min: f64, max: f64, steps: usize) -> Result<Self> {
        Self::validate(min, max, steps)?;
        Ok(Self {
            min,
            max,
            steps,
            log_spaced: false,
        })
    }

    pub fn log(min: f64, max: f64, steps: usize) -> Result<Self> {
        Self::validate(min, max, steps)?;
        if min <= 0.0 {
            return Err(Error::GridLogMin(min));
        }
        Ok(Self {
            min,
            max,
            steps,
            log_spaced: true,
        })
    }

    fn validate(min: f64, max: f64, steps: usize) -> Result<()> {
        if steps < 2 {
            return Err(Error::GridSteps(steps));
        }
        if min >= max || min.is_nan() || max.is_nan() {
            return Err(Error::GridBounds { min, max });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.steps
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, index: usize) -> f64 {
        debug_assert!(index < self.steps);
        if index == 0 {
            return self.min;
        }
        if index == self.steps - 1 {
            return self.max;
        }
        let frac = index as f64 / (self.steps - 1) as f64;
        if self.log_spaced {
            self.min * (self.max / self.min).powf(frac)
        } else {
            self.min + frac * (self.max - self.min)
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.steps).map(|i| self.value(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.value(i))
    }
}
