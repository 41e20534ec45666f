/** Two-decimal display formatting. The only transformation the UI
 * applies to numbers from the API. */
export function fmt2(value: number): string {
  const text = value.toFixed(2);
  return text === "-0.00" ? "0.00" : text;
}
