/* tslint:disable */
/* eslint-disable */

/**
 * Verifies one catalog identity and returns its record as JSON.
 */
export function verifyIdentity(id: string): string;

/**
 * Relative L² error of quantizing a Gaussian of width `width` centred at
 * `(cx, cy)` and recovering it.
 */
export function weylRoundTrip(n: number, extent: number, nu: number, cx: number, cy: number, width: number): number;

/**
 * Real part of the Wigner function of the ground (`excited = false`) or
 * first excited oscillator state, row-major on an `n × n` grid.
 */
export function wigner(n: number, extent: number, hbar: number, excited: boolean): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly verifyIdentity: (a: number, b: number) => [number, number, number, number];
    readonly weylRoundTrip: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly wigner: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
