"""HTTP JSON API exposing every analysis to the UI and to scripts.

The app is a thin shell: each endpoint loads journals from the workspace,
calls the corresponding library operation, and shapes the result. Heavy
artifacts (similarity, distances, projections) are computed lazily on first
request and cached by content hash; t-SNE runs as a pollable background job.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException, Query, Response

from treelab.clustering import OrderKey, flat_clusters, hierarchical_cluster, order_roots
from treelab.comparison import (
    ComparisonUnavailable,
    LLMClient,
    make_comparison_request,
    summarize_difference,
)
from treelab.diffing import line_diff
from treelab.embedding import EMBED_DIM, EmbeddingClient, embed_corpus
from treelab.findings import detect_identical_siblings, detect_repeated_bugs
from treelab.journal import ROOT_ID, RunSet, SolutionRun, merge_forest, modified_line_count, run_stats
from treelab.reduction import PointRef, project_pca, tsne_embedding
from treelab.service import schemas
from treelab.service.jobs import Job, JobRegistry
from treelab.service.workspace import UnknownRunError, Workspace
from treelab.similarity import similarity_matrix
from treelab.treedist import distance_matrix


def _stats_model(run: SolutionRun) -> schemas.RunStatsModel:
    s = run_stats(run)
    return schemas.RunStatsModel(
        total_time=s.total_time,
        best_node_id=s.best_node_id,
        best_metric=s.best_metric,
        n_functional=s.n_functional,
        n_buggy=s.n_buggy,
    )


def _runset_summary(runset: RunSet) -> schemas.RunsetSummary:
    lo, mean, hi = runset.time_range
    metric_range = None
    if runset.metric_range is not None:
        m_lo, m_mean, m_hi = runset.metric_range
        metric_range = schemas.RangeModel(min=m_lo, mean=m_mean, max=m_hi)
    return schemas.RunsetSummary(
        llm_id=runset.llm_id,
        run_ids=[r.run_id for r in runset.runs],
        time_range=schemas.RangeModel(min=lo, mean=mean, max=hi),
        metric_range=metric_range,
    )


def create_app(
    workspace: Workspace,
    llm_client: LLMClient | None = None,
    embed_client: EmbeddingClient | None = None,
) -> FastAPI:
    app = FastAPI(title="treelab", version="0.1.0")
    jobs = JobRegistry()

    def get_run(run_id: str) -> SolutionRun:
        try:
            return workspace.load_run(run_id)
        except UnknownRunError:
            raise HTTPException(status_code=404, detail=f"unknown run '{run_id}'")

    def get_runset(llm_id: str) -> RunSet:
        try:
            return workspace.runset(llm_id)
        except UnknownRunError:
            raise HTTPException(status_code=404, detail=f"no runs for LLM '{llm_id}'")

    @app.get("/runs", response_model=list[schemas.RunSummary])
    def list_runs():
        out = []
        for run_id in workspace.run_ids():
            run = workspace.load_run(run_id)
            out.append(
                schemas.RunSummary(
                    run_id=run.run_id,
                    llm_id=run.config.llm_id,
                    n_steps=run.config.n_steps,
                    n_drafts=run.config.n_drafts,
                    metric_direction=run.config.metric_direction.value,
                    n_nodes=len(run.nodes),
                    stats=_stats_model(run),
                )
            )
        return out

    @app.get("/runs/{run_id}/tree", response_model=schemas.TreeResponse)
    def run_tree(run_id: str):
        run = get_run(run_id)
        tree = merge_forest(run)
        nodes = []
        for record in sorted(run.nodes, key=lambda n: n.id):
            parent_code = "" if record.parent_id is None else run.node(record.parent_id).code
            nodes.append(
                schemas.TreeNode(
                    id=record.id,
                    parent_id=record.parent_id,
                    stage=record.stage.value,
                    status=record.status.value,
                    metric=record.metric,
                    exec_time=record.exec_time,
                    depth=tree.depth[record.id],
                    children=list(tree.children_of(record.id)),
                    modified_lines=modified_line_count(parent_code, record.code),
                )
            )
        return schemas.TreeResponse(
            run_id=run.run_id,
            root_children=list(tree.children_of(ROOT_ID)),
            nodes=nodes,
            stats=_stats_model(run),
        )

    @app.get("/runs/{run_id}/nodes/{node_id}", response_model=schemas.NodeDetail)
    def node_detail(run_id: str, node_id: int):
        run = get_run(run_id)
        try:
            record = run.node(node_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown node {node_id}")
        return schemas.NodeDetail(
            run_id=run.run_id,
            id=record.id,
            parent_id=record.parent_id,
            stage=record.stage.value,
            status=record.status.value,
            plan=record.plan,
            code=record.code,
            exec_output=record.exec_output,
            analysis_report=record.analysis_report,
            metric=record.metric,
            exec_time=record.exec_time,
            llm_id=record.llm_id,
        )

    @app.get("/runs/{run_id}/diff", response_model=schemas.DiffResponse)
    def run_diff(run_id: str, a: int, b: int):
        run = get_run(run_id)
        try:
            code_a, code_b = run.node(a).code, run.node(b).code
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=f"unknown node {exc.args[0]}")
        lines = line_diff(code_a, code_b)
        return schemas.DiffResponse(
            run_id=run.run_id,
            a=a,
            b=b,
            lines=[schemas.DiffLineModel(text=text, tag=tag) for text, tag in lines],
            modified_lines=sum(1 for _, tag in lines if tag != "shared"),
        )

    @app.get("/runs/{run_id}/similarity", response_model=schemas.SimilarityResponse)
    def run_similarity(run_id: str):
        run = get_run(run_id)

        def compute():
            matrix = similarity_matrix(run)
            return {
                "values": matrix.values.tolist(),
                "fallback": list(matrix.fallback),
            }

        payload = workspace.cached("similarity", workspace.journal_hash(run_id), {}, compute)
        return schemas.SimilarityResponse(
            run_id=run.run_id,
            size=len(payload["values"]),
            values=payload["values"],
            fallback=payload["fallback"],
        )

    @app.get("/runs/{run_id}/findings", response_model=schemas.FindingsResponse)
    def run_findings(run_id: str):
        run = get_run(run_id)
        return schemas.FindingsResponse(
            run_id=run.run_id,
            repeated_bugs=[
                schemas.RepeatedBugModel(
                    node_id=r.node_id, earlier_node_id=r.earlier_node_id, signature=r.signature
                )
                for r in detect_repeated_bugs(run)
            ],
            identical_siblings=detect_identical_siblings(run),
        )

    @app.get("/runsets", response_model=list[schemas.RunsetSummary])
    def list_runsets():
        return [_runset_summary(rs) for rs in workspace.runsets()]

    @app.get("/runsets/{llm_id}/distance", response_model=schemas.DistanceResponse)
    def runset_distance(llm_id: str):
        runset = get_runset(llm_id)
        run_ids = [r.run_id for r in runset.runs]

        def compute():
            return distance_matrix(runset).values.tolist()

        values = workspace.cached(
            "distance", workspace.corpus_hash(run_ids), {"llm": llm_id}, compute
        )
        return schemas.DistanceResponse(llm_id=llm_id, run_ids=run_ids, values=values)

    @app.get("/runsets/{llm_id}/dendrogram", response_model=schemas.DendrogramResponse)
    def runset_dendrogram(llm_id: str, clusters: int | None = Query(default=None, ge=1)):
        runset = get_runset(llm_id)
        run_ids = [r.run_id for r in runset.runs]

        def compute():
            return distance_matrix(runset).values.tolist()

        values = workspace.cached(
            "distance", workspace.corpus_hash(run_ids), {"llm": llm_id}, compute
        )
        dend = hierarchical_cluster(np.asarray(values, dtype=float))
        labels = None
        if clusters is not None:
            if clusters > dend.leaf_count:
                raise HTTPException(
                    status_code=400, detail=f"clusters must be <= {dend.leaf_count}"
                )
            labels = flat_clusters(dend, clusters)
        return schemas.DendrogramResponse(
            llm_id=llm_id,
            run_ids=run_ids,
            leaf_count=dend.leaf_count,
            merges=[
                schemas.MergeModel(
                    cluster_a=m.cluster_a,
                    cluster_b=m.cluster_b,
                    height=m.height,
                    new_cluster=m.new_cluster,
                )
                for m in dend.merges
            ],
            leaf_order=list(dend.leaf_order),
            labels=labels,
        )

    @app.get("/runsets/{llm_id}/order", response_model=schemas.OrderResponse)
    def runset_order(llm_id: str, key: str = Query(...)):
        runset = get_runset(llm_id)
        try:
            order = order_roots(runset, OrderKey(key))
        except ValueError:
            raise HTTPException(
                status_code=400, detail=f"unknown key '{key}'; one of {[k.value for k in OrderKey]}"
            )
        return schemas.OrderResponse(
            llm_id=llm_id,
            key=key,
            order=order,
            run_ids=[runset.runs[i].run_id for i in order],
        )

    def _corpus_points() -> tuple[list[str], list[PointRef]]:
        codes: list[str] = []
        refs: list[PointRef] = []
        for run_id in workspace.run_ids():
            run = workspace.load_run(run_id)
            for record in sorted(run.nodes, key=lambda n: n.id):
                codes.append(record.code)
                refs.append(PointRef(run.run_id, record.id, record.llm_id))
        return codes, refs

    @app.get("/projection")
    def projection(
        algo: str = Query(...),
        perplexity: float = 30.0,
        iterations: int = 1000,
        seed: int = 0,
    ):
        if algo == "umap":
            raise HTTPException(status_code=501, detail="umap is reserved but not implemented")
        if algo not in ("pca", "tsne"):
            raise HTTPException(status_code=400, detail=f"unknown algorithm '{algo}'")
        codes, refs = _corpus_points()
        if len(codes) < 2:
            raise HTTPException(status_code=400, detail="need at least 2 nodes to project")
        corpus_hash = workspace.corpus_hash()

        if algo == "pca":
            def compute():
                vectors = embed_corpus(codes, EMBED_DIM, client=embed_client)
                points = project_pca(vectors, refs)
                return [p.__dict__ for p in points]

            payload = workspace.cached("projection", corpus_hash, {"algo": "pca"}, compute)
            return schemas.ProjectionResponse(
                algo="pca", points=[schemas.PointModel(**p) for p in payload]
            )

        params = {"algo": "tsne", "perplexity": perplexity, "iterations": iterations, "seed": seed}

        def work(job: Job):
            def compute():
                vectors = embed_corpus(codes, EMBED_DIM, client=embed_client)

                def on_progress(done: int, total: int):
                    job.progress = done / total

                result = tsne_embedding(
                    vectors,
                    perplexity=perplexity,
                    iterations=iterations,
                    seed=seed,
                    progress=on_progress,
                    should_stop=job.cancel_event.is_set,
                )
                return [
                    {"x": float(x), "y": float(y), **ref.__dict__}
                    for (x, y), ref in zip(result.coords, refs)
                ]

            return workspace.cached("projection", corpus_hash, params, compute)

        job = jobs.submit(work)
        return schemas.JobCreated(job_id=job.id)

    @app.get("/jobs/{job_id}", response_model=schemas.JobStatus)
    def job_status(job_id: str):
        job = jobs.get(job_id)
        if job is None:
            raise HTTPException(status_code=404, detail=f"unknown job '{job_id}'")
        points = None
        if job.status == "done":
            points = [schemas.PointModel(**p) for p in job.result]
        return schemas.JobStatus(
            job_id=job.id, status=job.status, progress=job.progress, error=job.error, points=points
        )

    @app.post("/jobs/{job_id}/cancel", response_model=schemas.JobStatus)
    def job_cancel(job_id: str):
        job = jobs.cancel(job_id)
        if job is None:
            raise HTTPException(status_code=404, detail=f"unknown job '{job_id}'")
        return schemas.JobStatus(
            job_id=job.id, status=job.status, progress=job.progress, error=job.error
        )

    @app.get("/packages", response_model=schemas.PackagesResponse)
    def packages(sort: str | None = None):
        from treelab.packages import package_table

        runsets = workspace.runsets()
        table = package_table(runsets)
        order = table.sorted_packages(sort) if sort else list(table.packages)
        if sort and sort not in table.llm_ids:
            raise HTTPException(status_code=404, detail=f"no runs for LLM '{sort}'")
        rows = [
            schemas.PackageRowModel(
                package=pkg,
                cells=[
                    schemas.PackageCellModel(
                        llm_id=llm,
                        use_count=table.cell(pkg, llm).use_count,
                        buggy_count=table.cell(pkg, llm).buggy_count,
                    )
                    for llm in table.llm_ids
                ],
            )
            for pkg in order
        ]
        return schemas.PackagesResponse(llm_ids=list(table.llm_ids), rows=rows)

    @app.post("/compare", response_model=schemas.CompareResponse)
    def compare(body: schemas.CompareRequestModel, response: Response):
        def collect(points: list[schemas.PointId]) -> list[str]:
            codes = []
            for point in points:
                run = get_run(point.run_id)
                try:
                    codes.append(run.node(point.node_id).code)
                except KeyError:
                    raise HTTPException(
                        status_code=404,
                        detail=f"unknown node {point.node_id} in run '{point.run_id}'",
                    )
            return codes

        req = make_comparison_request(collect(body.first), collect(body.second))
        try:
            text = summarize_difference(req, client=llm_client)
        except ComparisonUnavailable as exc:
            raise HTTPException(status_code=503, detail=str(exc), headers={"Retry-After": "5"})
        mode = "offline" if llm_client is None else "live"
        return schemas.CompareResponse(mode=mode, prompt=req.prompt, text=text)

    return app


def serve(workspace: Workspace, host: str = "127.0.0.1", port: int = 8765, **clients) -> None:
    """Run the API server (blocking)."""
    import uvicorn

    uvicorn.run(create_app(workspace, **clients), host=host, port=port)
