// Least-squares polynomial fitting for the friendship-game panels.
//
// Ticks are normalized to [0, 1] before building the normal equations so a
// degree-4 fit over t in [0, 100] stays well conditioned.

export interface FitResult {
  value: number; // predicted series value at the expiration tick, clamped to [0, 100]
  raw: number; // unclamped prediction
  degreeUsed: number;
  lowConfidence: boolean; // true when the data forced a lower-degree fallback
  curve: (t: number) => number;
}

function solve(matrix: number[][], rhs: number[]): number[] | null {
  // Gaussian elimination with partial pivoting on the (small) normal equations.
  const n = rhs.length;
  const a = matrix.map((row, i) => [...row, rhs[i]]);
  for (let col = 0; col < n; col++) {
    let pivot = col;
    for (let r = col + 1; r < n; r++) {
      if (Math.abs(a[r][col]) > Math.abs(a[pivot][col])) pivot = r;
    }
    if (Math.abs(a[pivot][col]) < 1e-12) return null;
    [a[col], a[pivot]] = [a[pivot], a[col]];
    for (let r = 0; r < n; r++) {
      if (r === col) continue;
      const factor = a[r][col] / a[col][col];
      for (let c = col; c <= n; c++) a[r][c] -= factor * a[col][c];
    }
  }
  return a.map((row, i) => row[n] / a[i][i]);
}

export function fitPolynomial(
  points: [number, number][],
  degree: number,
  scaleHint = 0,
): { coeffs: number[]; scale: number } | null {
  if (points.length === 0) return null;
  const distinct = new Set(points.map(([t]) => t)).size;
  const deg = Math.max(0, Math.min(degree, points.length - 1, distinct - 1));
  const scale = Math.max(1, scaleHint, ...points.map(([t]) => Math.abs(t)));

  const n = deg + 1;
  const ata: number[][] = Array.from({ length: n }, () => new Array(n).fill(0));
  const aty: number[] = new Array(n).fill(0);
  for (const [t, v] of points) {
    const u = t / scale;
    const basis: number[] = [];
    for (let k = 0, p = 1; k < n; k++, p *= u) basis.push(p);
    for (let i = 0; i < n; i++) {
      aty[i] += basis[i] * v;
      for (let j = 0; j < n; j++) ata[i][j] += basis[i] * basis[j];
    }
  }
  const coeffs = solve(ata, aty);
  return coeffs === null ? null : { coeffs, scale };
}

export function evalPolynomial(coeffs: number[], scale: number, t: number): number {
  const u = t / scale;
  let value = 0;
  for (let k = coeffs.length - 1; k >= 0; k--) value = value * u + coeffs[k];
  return value;
}

export function fitAndPredict(
  points: [number, number][],
  degree: number,
  expirationTick: number,
): FitResult | null {
  if (points.length === 0) return null;
  const fitted = fitPolynomial(points, degree, expirationTick);
  if (fitted === null) return null;
  const degreeUsed = fitted.coeffs.length - 1;
  const raw = evalPolynomial(fitted.coeffs, fitted.scale, expirationTick);
  return {
    value: Math.min(100, Math.max(0, Math.round(raw))),
    raw,
    degreeUsed,
    lowConfidence: degreeUsed < degree,
    curve: (t) => evalPolynomial(fitted.coeffs, fitted.scale, t),
  };
}
