/** Typed client for the composer's HTTP API. */

import type {
  AssemblyReport,
  ConstructionDoc,
  CoverageReport,
  Fragment,
  FragmentDetail,
  ProjectReportDoc,
} from './types';

export interface ApiClient {
  listFragments(params?: { kind?: string; origin?: string; q?: string }): Promise<Fragment[]>;
  getFragment(id: string): Promise<FragmentDetail>;
  createMethod(name: string): Promise<string>;
  putSelection(methodId: string, chosen: string[]): Promise<ConstructionDoc>;
  applyClosure(methodId: string): Promise<ConstructionDoc>;
  getReport(methodId: string): Promise<AssemblyReport>;
  getOrder(methodId: string): Promise<string[] | null>;
  coverage(corpus: unknown): Promise<CoverageReport>;
  usability(project: unknown): Promise<ProjectReportDoc>;
}

/** Error carrying the API's JSON body verbatim for the notice area. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: unknown,
  ) {
    super(`API error ${status}: ${JSON.stringify(body)}`);
  }
}

/** Base URL precedence: runtime global, build-time env, local default. */
const DEFAULT_BASE =
  (globalThis as { SMEFORGE_API_BASE?: string }).SMEFORGE_API_BASE ??
  (import.meta as { env?: Record<string, string> }).env?.VITE_API_BASE ??
  'http://127.0.0.1:8080';

export class HttpApiClient implements ApiClient {
  constructor(private readonly base: string = DEFAULT_BASE) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, {
      headers: { 'content-type': 'application/json' },
      ...init,
    });
    const body = response.status === 204 ? null : await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body);
    }
    return body as T;
  }

  listFragments(params: { kind?: string; origin?: string; q?: string } = {}) {
    const query = new URLSearchParams();
    if (params.kind) query.set('kind', params.kind);
    if (params.origin) query.set('origin', params.origin);
    if (params.q) query.set('q', params.q);
    const suffix = query.toString() ? `?${query}` : '';
    return this.request<Fragment[]>(`/fragments${suffix}`);
  }

  getFragment(id: string) {
    return this.request<FragmentDetail>(`/fragments/${encodeURIComponent(id)}`);
  }

  async createMethod(name: string) {
    const body = await this.request<{ id: string }>('/methods', {
      method: 'POST',
      body: JSON.stringify({ name }),
    });
    return body.id;
  }

  putSelection(methodId: string, chosen: string[]) {
    return this.request<ConstructionDoc>(`/methods/${methodId}/selection`, {
      method: 'PUT',
      body: JSON.stringify({ chosen }),
    });
  }

  applyClosure(methodId: string) {
    return this.request<ConstructionDoc>(`/methods/${methodId}/closure`, {
      method: 'POST',
    });
  }

  getReport(methodId: string) {
    return this.request<AssemblyReport>(`/methods/${methodId}/report`);
  }

  /** Returns null when ordering is blocked by violations (409). */
  async getOrder(methodId: string) {
    try {
      const body = await this.request<{ order: string[] }>(`/methods/${methodId}/order`);
      return body.order;
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) return null;
      throw error;
    }
  }

  coverage(corpus: unknown) {
    return this.request<CoverageReport>('/metrics/coverage', {
      method: 'POST',
      body: JSON.stringify(corpus),
    });
  }

  usability(project: unknown) {
    return this.request<ProjectReportDoc>('/metrics/usability', {
      method: 'POST',
      body: JSON.stringify(project),
    });
  }
}
