/** Wire types mirroring the API's JSON documents. */

export type FragmentKind =
  | 'process'
  | 'task'
  | 'technique'
  | 'work_product'
  | 'producer'
  | 'language'
  | 'stage';

export type DeonticValue = 'M' | 'R' | 'O' | 'D' | 'F';

export interface Fragment {
  id: string;
  name: string;
  kind: FragmentKind;
  description: string;
  origin: 'so-extension' | 'opf-baseline';
  owner_process?: string;
  aliases?: string[];
}

export interface CellDoc {
  row: string;
  col: string;
  value: DeonticValue;
}

export interface FragmentDetail {
  fragment: Fragment;
  cells: CellDoc[];
  predecessors: string[];
  successors: string[];
}

export type FindingCode =
  | 'MISSING_MANDATORY'
  | 'FORBIDDEN_PRESENT'
  | 'DISCOURAGED_PRESENT'
  | 'RECOMMENDED_ABSENT';

export interface Finding {
  severity: 'error' | 'warning' | 'suggestion';
  code: FindingCode;
  cell: CellDoc;
}

export interface StructuralIssue {
  code: string;
  subjects: string[];
}

export interface EdgeDoc {
  before: string;
  after: string;
  source: string;
}

export interface AssemblyReport {
  ok: boolean;
  deontic: Finding[];
  structural: StructuralIssue[];
  precedence: EdgeDoc[];
}

export interface ConstructionDoc {
  id: string;
  name: string;
  selection: string[];
  stage_of: Record<string, string>;
  notes: string;
}

export interface CoverageRow {
  name: string;
  nt: number;
  smf: number;
  mc_exact: { numerator: number; denominator: number };
  mc_display: string;
  fully_covered: boolean;
}

export interface CoverageReport {
  per_sdm: CoverageRow[];
  dc: number;
  dc_literal: number;
}

export interface UsabilityDoc {
  total: number;
  met: number;
  percent_exact: { numerator: number; denominator: number };
  percent_display: number;
  unmet: string[];
  implied_selection: string[];
}

export interface ProjectReportDoc {
  name: string;
  requirements: Array<{
    id: string;
    title: string;
    explanation: string;
    tasks: string[];
    techniques: string[];
    met: boolean;
  }>;
  usability: UsabilityDoc;
}
