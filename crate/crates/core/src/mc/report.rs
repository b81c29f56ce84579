use std::io::Write;
use std::time::Duration;

/// |z| above which a bin counts as an outlier.
pub const Z_THRESHOLD: f64 = 3.0;

/// Largest tolerated fraction of outlier bins.
pub const OUTLIER_ALLOWANCE: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonBin {
    pub r: f64,
    pub analytic: f64,
    pub mc_estimate: f64,
    pub std_error: f64,
    pub z_score: f64,
}

impl ComparisonBin {
    /// z = (estimate − analytic)/s.e.; with a zero standard error the bin is
    /// an outlier unless the two agree to rounding.
    pub fn new(r: f64, analytic: f64, mc_estimate: f64, std_error: f64) -> Self {
        let diff = mc_estimate - analytic;
        let z_score = if std_error > 0.0 {
            diff / std_error
        } else if diff.abs() <= 1e-12 * (1.0 + analytic.abs()) {
            0.0
        } else {
            diff.signum() * f64::INFINITY
        };
        ComparisonBin {
            r,
            analytic,
            mc_estimate,
            std_error,
            z_score,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub quantity: String,
    pub beta: f64,
    pub bins: Vec<ComparisonBin>,
    pub pass: bool,
    pub n_samples: usize,
    pub wall_time: Duration,
}

impl ComparisonReport {
    pub fn new(quantity: impl Into<String>, beta: f64, bins: Vec<ComparisonBin>, n_samples: usize, wall_time: Duration) -> Self {
        let mut report = ComparisonReport {
            quantity: quantity.into(),
            beta,
            bins,
            pass: false,
            n_samples,
            wall_time,
        };
        report.pass = report.outlier_fraction() <= OUTLIER_ALLOWANCE;
        report
    }

    pub fn outliers(&self) -> usize {
        self.bins.iter().filter(|b| !(b.z_score.abs() <= Z_THRESHOLD)).count()
    }

    pub fn outlier_fraction(&self) -> f64 {
        if self.bins.is_empty() {
            return 0.0;
        }
        self.outliers() as f64 / self.bins.len() as f64
    }

    pub fn max_abs_z(&self) -> f64 {
        self.bins.iter().map(|b| b.z_score.abs()).fold(0.0, f64::max)
    }

    /// `PASS|FAIL <quantity> <beta> <n_samples> <outlier_fraction>`.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {} {} {} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.quantity,
            self.beta,
            self.n_samples,
            self.outlier_fraction()
        )
    }

    /// Versioned CSV; the wall time is left out so reruns are byte-identical.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(
            out,
            "# abwave-report v1 quantity={} beta={} n_samples={}",
            self.quantity, self.beta, self.n_samples
        )?;
        writeln!(out, "R,analytic,mc_estimate,std_error,z_score")?;
        for b in &self.bins {
            writeln!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                b.r, b.analytic, b.mc_estimate, b.std_error, b.z_score
            )?;
        }
        Ok(())
    }
}
