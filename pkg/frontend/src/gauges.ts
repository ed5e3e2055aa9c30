// Inequality gauges: a bar from 0 to max(1.5, lhs) with the physical
// threshold marked at 1. The bar saturates red past the threshold.

export interface GaugeView {
  value: number;
  max: number;
  /** Bar fill as a fraction of the gauge width, clamped to [0, 1]. */
  fraction: number;
  /** Position of the "1" threshold tick as a fraction of the width. */
  thresholdFraction: number;
  over: boolean;
}

export function gaugeView(lhs: number): GaugeView {
  const max = Math.max(1.5, lhs);
  return {
    value: lhs,
    max,
    fraction: Math.min(1, Math.max(0, lhs / max)),
    thresholdFraction: 1 / max,
    over: lhs > 1,
  };
}
