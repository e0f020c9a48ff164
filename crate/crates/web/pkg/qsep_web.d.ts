/* tslint:disable */
/* eslint-disable */

/**
 * Runs the witness on a pasted matrix document
 * `{"n_qubits": 3|4, "re": [[..]], "im": [[..]]}`.
 */
export function analyze(text: string): string;

/**
 * Witness table for the molecule mixture. Weights are rescaled to sum to one.
 */
export function molecule(p_ab: number, p_ac: number, p_bc: number): string;

/**
 * Matrix document for a named state: ghz, ghz4, upb, werner.
 */
export function preset(name: string): string;

/**
 * Werner state on A,BC at `x`: PT spectrum of the A,BC reduction and the
 * full witness table.
 */
export function werner(x: number): string;

/**
 * Minimum PT eigenvalue of the Werner family over `[0, 1]` at `steps`
 * points, plus the bisected threshold.
 */
export function werner_curve(steps: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze: (a: number, b: number) => [number, number];
    readonly molecule: (a: number, b: number, c: number) => [number, number];
    readonly preset: (a: number, b: number) => [number, number];
    readonly werner: (a: number) => [number, number];
    readonly werner_curve: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
