import { describe, expect, it } from "vitest";

import { fitAndPredict } from "../src/fit.js";

const quartic = (t: number) => 20 + 0.9 * t - 0.03 * t * t + 4e-4 * t ** 3 - 1.8e-6 * t ** 4;

describe("fitAndPredict", () => {
  it("recovers a degree-4 polynomial exactly (within rounding)", () => {
    const points: [number, number][] = [];
    for (let t = 0; t < 60; t += 4) points.push([t, quartic(t)]);
    const result = fitAndPredict(points, 4, 80)!;
    expect(result.degreeUsed).toBe(4);
    expect(result.lowConfidence).toBe(false);
    const truth = Math.min(100, Math.max(0, Math.round(quartic(80))));
    expect(Math.abs(result.value - truth)).toBeLessThanOrEqual(1);
  });

  it("stays close on integer-rounded samples inside the data window", () => {
    // Server series are rounded to integers; in-window predictions absorb
    // that noise (extrapolation past the data is inherently less stable).
    const points: [number, number][] = [];
    for (let t = 0; t < 50; t += 2) points.push([t, Math.round(quartic(t))]);
    const result = fitAndPredict(points, 4, 45)!;
    expect(Math.abs(result.raw - quartic(45))).toBeLessThanOrEqual(1.5);
  });

  it("falls back to a lower degree when underdetermined", () => {
    const result = fitAndPredict([[5, 42], [9, 44]], 4, 20)!;
    expect(result.degreeUsed).toBe(1);
    expect(result.lowConfidence).toBe(true);
  });

  it("single point degenerates to a constant fit", () => {
    const result = fitAndPredict([[5, 42]], 4, 99)!;
    expect(result.degreeUsed).toBe(0);
    expect(result.value).toBe(42);
    expect(result.lowConfidence).toBe(true);
  });

  it("returns null with no points", () => {
    expect(fitAndPredict([], 4, 10)).toBeNull();
  });

  it("clamps predictions into the 0..100 guess range", () => {
    const steep: [number, number][] = [[0, 0], [1, 30], [2, 60], [3, 90]];
    const result = fitAndPredict(steep, 1, 10)!;
    expect(result.value).toBe(100);
    expect(result.raw).toBeGreaterThan(100);
  });

  it("duplicate-tick points do not inflate the degree", () => {
    const result = fitAndPredict([[4, 10], [4, 12], [4, 11]], 4, 8)!;
    expect(result.degreeUsed).toBe(0);
  });
});
