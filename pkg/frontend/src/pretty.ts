import type { PolyData, TermData } from "./types.js";

// Turns the wire form of a Laurent polynomial into the fraction shape
// people expect to read, e.g. [[-1,0,1],"1"],[[-1,1,0],"1"] becomes
// "(x2+x3)/x1". The service's canonical text keeps negative exponents;
// this module clears them by pulling out the common monomial
// denominator and writing numerator/denominator.

function compareDescLex(a: number[], b: number[]): number {
  for (let i = 0; i < a.length; i++) {
    const ai = a[i] ?? 0;
    const bi = b[i] ?? 0;
    if (ai !== bi) return bi - ai;
  }
  return 0;
}

function monomial(exponents: number[]): string {
  const factors: string[] = [];
  exponents.forEach((e, i) => {
    if (e === 0) return;
    factors.push(e === 1 ? `x${i + 1}` : `x${i + 1}^${e}`);
  });
  return factors.join("*");
}

function termText(term: TermData): string {
  const [exponents, coeff] = term;
  const mono = monomial(exponents);
  if (mono === "") return coeff;
  if (coeff === "1") return mono;
  if (coeff === "-1") return `-${mono}`;
  return `${coeff}*${mono}`;
}

function joinTerms(parts: string[]): string {
  let out = "";
  for (const part of parts) {
    if (out === "") {
      out = part;
    } else if (part.startsWith("-")) {
      out += `-${part.slice(1)}`;
    } else {
      out += `+${part}`;
    }
  }
  return out;
}

/**
 * Render a polynomial in fraction form. Every exponent vector must
 * have the same length as the first one; the wire format guarantees
 * this and a mismatch throws.
 */
export function fractionText(poly: PolyData): string {
  if (poly.length === 0) return "0";
  const width = poly[0]![0].length;
  for (const [exponents] of poly) {
    if (exponents.length !== width) {
      throw new Error(`ragged exponent vector: ${exponents.length} vs ${width}`);
    }
  }

  const denom: number[] = new Array(width).fill(0);
  for (const [exponents] of poly) {
    exponents.forEach((e, i) => {
      if (-e > denom[i]!) denom[i] = -e;
    });
  }

  const shifted: TermData[] = poly.map(([exponents, coeff]) => [
    exponents.map((e, i) => e + denom[i]!),
    coeff,
  ]);
  shifted.sort((a, b) => compareDescLex(a[0], b[0]));

  const numerator = joinTerms(shifted.map(termText));
  const denomText = monomial(denom);
  if (denomText === "") return numerator;

  const top = shifted.length > 1 ? `(${numerator})` : numerator;
  const factorCount = denom.filter((e) => e > 0).length;
  const bottom = factorCount > 1 ? `(${denomText})` : denomText;
  return `${top}/${bottom}`;
}
