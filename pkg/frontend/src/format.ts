// Display formatting: panels round to 4 decimals, tooltips keep full
// precision (the exact value the service sent).

export function display4(value: number): string {
  const rounded = value.toFixed(4);
  return rounded === "-0.0000" ? "0.0000" : rounded;
}

export function fullPrecision(value: number): string {
  return String(value);
}
